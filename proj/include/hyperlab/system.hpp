#pragma once
//
// System definitions and metrics shared by every other layer.
//
// Two concrete flows are supported: the Morse-square substitution subshift
// (shift action on bi-infinite binary words) and the torus skew product
// T(x,y) = (x + alpha, x + y). The symbolic metric is 2^-m with m the first
// disagreement index; equality is only ever certified up to the comparison
// horizon below. The torus metric is the max of the two circle distances.

#include <cstdint>
#include <optional>
#include <vector>

#include "hyperlab/point.hpp"

namespace hyperlab {

// Symbolic comparison horizon: agreement on all indices |k| < 2^14 is
// reported as distance 0.
inline constexpr std::int64_t kComparisonRadius = std::int64_t{1} << 14;

// Horizon for deciding whether an explicit window lies on a distinguished
// orbit: shifts |k| <= 2^12 are tested.
inline constexpr std::int64_t kOrbitMembershipHorizon = std::int64_t{1} << 12;

// Per-reduction floating error allowance for torus arithmetic; report-level
// tolerances add this explicitly, scaled by the number of reductions.
inline constexpr double kModStepBudget = 1e-9;

enum class SystemKind { SubstitutionSubshift, TorusSkew };

struct SystemSpec {
  SystemKind kind;
  Substitution subst;  // subshift only
  double alpha = 0.0;  // torus only

  bool operator==(const SystemSpec&) const = default;
};

SystemSpec morse_square_system();

// Throws std::invalid_argument unless alpha is in (0,1) and, as an exact
// dyadic rational, has lowest-terms denominator > 10^6.
SystemSpec torus_skew_system(double alpha);

// frac((sqrt 5 - 1)/2); the default rotation number for shipped scenarios.
double golden_alpha();

// Throws std::invalid_argument unless p belongs to sys.
void require_in_system(const SystemSpec& sys, const Point& p);

// min(|d|, 1 - |d|) on the circle, in [0, 1/2].
double circle_distance(double u, double v);

// First disagreement of two symbolic points:
//   index   = min |k| with x_k != y_k, if one is found,
//   nullopt = no disagreement found. `certified` then tells how far the
//             comparison reached: kComparisonRadius for a full-horizon
//             verification, less when an explicit window ran out.
struct Disagreement {
  std::optional<std::int64_t> index;
  std::int64_t certified = 0;
};
Disagreement first_disagreement(const Substitution& s, const SymbolicPoint& x,
                                const SymbolicPoint& y,
                                std::int64_t horizon = kComparisonRadius);

// The metric of sys. Symbolic: 2^-m (0 when no disagreement was certified to
// the full horizon; 2^-(r+1) when an explicit window was exhausted after
// agreeing to radius r). Torus: max of the coordinate circle distances.
// Throws std::invalid_argument on mixed-system comparison.
double point_distance(const SystemSpec& sys, const Point& x, const Point& y);

// Distance decision without computing the exact value: d(x,y) <= 2^-depth?
bool symbolic_within(const Substitution& s, const SymbolicPoint& x,
                     const SymbolicPoint& y, std::int64_t depth);

// True when no disagreement is found up to the horizon (the sense in which
// two points are "equal" at finite resolution).
bool points_agree(const SystemSpec& sys, const Point& x, const Point& y);

// The group action on single points: sigma^n for the subshift, T^n for the
// torus (any sign of n).
Point shift_point(const SystemSpec& sys, const Point& p, std::int64_t n);

// Greedy metric pruning, deterministic in input order: a point is retained
// iff its distance to every previously retained point exceeds eps/2. Every
// input point ends up within eps/2 of some retained point.
std::vector<Point> epsilon_net_prune(const std::vector<Point>& points,
                                     double eps, const SystemSpec& sys);

// Deterministic 64-bit generator (splitmix64); used instead of std::
// distributions so that seeded values are identical across platforms.
struct SplitMix64 {
  std::uint64_t state;
  explicit SplitMix64(std::uint64_t seed) : state(seed) {}
  std::uint64_t next();
  double next_unit();                                // [0,1)
  std::int64_t next_in(std::int64_t lo, std::int64_t hi);  // inclusive
};

}  // namespace hyperlab
