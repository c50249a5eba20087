#pragma once
//
// Time nets with convergence certificates, cluster sets realizing the
// prolongation of a set along a net, orbit-closure estimates, recurrence
// and proximality reports, and quasifactor minimality checks.
//
// A TimeNet is the finite stand-in for a net of group elements converging
// to a member of the enveloping semigroup. Its certificate records, per
// time, either the window radius on which the time reproduces an idempotent
// table (subshift) or the deviation from the identity on a probe panel
// (torus). Cluster sets only consume the subnet of times certified at the
// requested resolution, and flag non-convergence instead of guessing.

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "hyperlab/hyperspace.hpp"
#include "hyperlab/idempotents.hpp"
#include "hyperlab/system.hpp"

namespace hyperlab {

struct TimeNet {
  enum class Kind { IdempotentApprox, IdentityApprox, Raw };

  Kind kind = Kind::Raw;
  SystemKind system = SystemKind::SubstitutionSubshift;
  std::string label;
  // Strictly increasing in magnitude; idempotent nets are sign-coherent
  // (u-type tables arise along forward shifts, v-type only along backward
  // ones, so a net never mixes the two asymptotic regimes).
  std::vector<std::int64_t> times;

  // Certificates, parallel to times. Subshift idempotent nets: the window
  // radius achieved at each time (nondecreasing; composed nets may carry
  // nonpositive entries for uncertified levels). Torus identity nets: the
  // probe deviation at each time (nonincreasing).
  std::vector<std::int64_t> radii;
  std::vector<double> scores;

  std::optional<IdempotentTable> table;  // idempotent nets
  std::vector<SymbolicPoint> panel;      // recorded off-orbit sample panel
  std::vector<TorusPoint> probe;         // identity-net probe points
  std::vector<std::int64_t> requested_radii;
  bool truncated = false;
  std::string note;
};

struct EmptyNetError : std::runtime_error {
  EmptyNetError(const std::string& what, std::int64_t best_n, std::int64_t best_depth)
      : std::runtime_error(what), best_n(best_n), best_depth(best_depth) {}
  std::int64_t best_n;      // time with the deepest partial agreement
  std::int64_t best_depth;  // that agreement radius
};

// The fixed pseudo-random sample panel witnessing "identity off the
// distinguished orbits": eight shifts of the base-a fixed point drawn just
// beyond the orbit-membership horizon from a recorded seed.
inline constexpr std::uint64_t kPanelSeed = 0x70616e656cull;
std::vector<SymbolicPoint> morse_net_panel();

// Times n <= horizon at which sigma^n reproduces `table` on windows of the
// requested radii: window-W agreement on all four distinguished bases
// against their table images, and window-W returns of the sample panel.
// Radii must be positive and strictly increasing. Unreachable radii
// truncate the net (recorded); an unreachable first radius throws
// EmptyNetError. An empty radii list yields an empty idempotent net.
TimeNet timenet_for_idempotent(const SystemSpec& sys, const IdempotentTable& table,
                               const std::vector<std::int64_t>& radii,
                               std::int64_t horizon);

// The constant net {t} (any sign, t != 0 not required).
TimeNet constant_net(const SystemSpec& sys, std::int64_t t);

// Torus identity-approximation net: scans n in [2, horizon] for times whose
// action moves every probe point the least; records the strictly improving
// subsequence (at most max_times entries, latest kept).
TimeNet identity_timenet(const SystemSpec& sys, const std::vector<TorusPoint>& probe,
                         std::int64_t horizon, int max_times = 24);

// Levelwise composition: times are p.times[i] + q.times[i] (outer net p,
// inner net q; both lists truncated to the shorter). For two subshift
// idempotent nets the composed certificate radius at level i is
// min(p.radii[i], q.radii[i] - p.times[i]); other combinations compose as
// uncertified raw nets.
TimeNet compose_nets(const TimeNet& p, const TimeNet& q);

// The default radii and horizon for shipped idempotent nets.
inline const std::vector<std::int64_t> kDefaultNetRadii = {8, 12, 16, 24};
inline constexpr std::int64_t kDefaultNetHorizon = std::int64_t{1} << 20;

struct ClusterSet {
  FiniteClosedSet result;
  FiniteClosedSet input;
  TimeNet net;
  double eps = 0.0;
  bool converged = false;
  double witness = 0.0;        // Hausdorff gap between the last two partials
  std::int64_t times_used = 0; // size of the certified subnet
  std::string note;
};

// Prolongation of A along the net at resolution eps: pushes A along the
// certified subnet, identifies iterates of distinguished-orbit points
// against their limits, prunes the accumulation at eps, and requires the
// last two partial accumulations to agree within eps. Throws on an empty
// net or a system mismatch; non-convergence is reported, never silent.
ClusterSet cluster_set(const FiniteClosedSet& A, const TimeNet& net, double eps);

enum class RecurrenceVerdict { SyndeticAtHorizon, GapGrowth };
const char* recurrence_verdict_name(RecurrenceVerdict v);

struct RecurrenceReport {
  double eps = 0.0;
  std::int64_t horizon = 0;
  std::vector<std::int64_t> return_times;  // n with d_H(T^n A, A) <= eps
  std::vector<double> return_dists;        // d_H at each return
  std::vector<std::int64_t> gaps;  // between 0, returns..., horizon
  std::int64_t max_gap = 0;
  std::int64_t first_half_max_gap = 0;   // gaps ending in (0, horizon/2]
  std::int64_t second_half_max_gap = 0;  // gaps ending in (horizon/2, horizon]
  RecurrenceVerdict verdict = RecurrenceVerdict::GapGrowth;
};

// Uniform-recurrence probe of A under the induced action. Syndetic at this
// horizon when the second-half max gap is at most twice the first-half max
// gap. Requires horizon >= 16.
RecurrenceReport recurrence_report(const FiniteClosedSet& A, double eps,
                                   std::int64_t horizon);

// The tuple spread out to a point of the product system: returns are the
// times at which every coordinate re-enters its eps-box simultaneously.
RecurrenceReport ap_set_test(const SystemSpec& sys, const std::vector<Point>& tuple,
                             double eps, std::int64_t horizon);

enum class PairVerdict { ProximalAtHorizon, DistalAtHorizon, Undecided };
const char* pair_verdict_name(PairVerdict v);

inline constexpr double kProximalThresholdSubshift = 0x1.0p-10;
inline constexpr double kProximalThresholdTorus = 1e-3;

struct PairReport {
  double inf_over_horizon = 0.0;  // min over n in [0, horizon]
  double liminf_estimate = 0.0;   // min over n in [1, horizon]
  std::int64_t argmin_n = 0;
  std::int64_t horizon = 0;
  double threshold = 0.0;
  PairVerdict verdict = PairVerdict::Undecided;
};

// Orbit-pair separation scan. Proximal when the estimate dips to the
// threshold; distal when a floor above 4x the threshold persists across the
// whole horizon; undecided between. threshold <= 0 selects the per-system
// default.
PairReport proximal_pair(const SystemSpec& sys, const Point& x, const Point& y,
                         std::int64_t horizon, double threshold = 0.0);

// Estimate of the prolongation of the single point x: pushes `samples`
// deterministic in-system points within delta of x (x itself first) to the
// horizon and prunes the accumulated visits at eps.
FiniteClosedSet prolongation_point(const SystemSpec& sys, const Point& x,
                                   double delta, int samples, std::int64_t horizon,
                                   double eps);

struct DStarEstimate {
  std::vector<FiniteClosedSet> members;
  std::vector<std::int64_t> times;  // orbit time of each member
};

// Hyperspace forward-orbit closure estimate: {T^n A : 0 <= n <= horizon}
// pruned greedily under the Hausdorff metric at eps.
DStarEstimate d_star_estimate(const FiniteClosedSet& A, std::int64_t horizon,
                              double eps);

struct QuasifactorReport {
  bool minimal = false;
  // Violating pair when not minimal: member whose forward orbit never comes
  // eps-close to the target member.
  std::optional<std::pair<std::size_t, std::size_t>> witness;
  double eps = 0.0;
  std::int64_t horizon = 0;
};

// Minimality probe of a candidate subcollection of the hyperspace: every
// member's forward orbit must come eps-close (Hausdorff) to every other
// member within the horizon.
QuasifactorReport quasifactor_check(const std::vector<FiniteClosedSet>& collection,
                                    double eps, std::int64_t horizon);

// Finite stand-in for the whole space at resolution eps: an eps-grid for
// the torus; for the subshift, one representative orbit point per admissible
// central word (factor collection verified stable under doubling the scan).
FiniteClosedSet x_standin(const SystemSpec& sys, double eps);

// Denser subshift stand-in: all orbit points sigma^pos(a), 0 <= pos < count.
FiniteClosedSet x_standin_interval(const SystemSpec& sys, std::int64_t count,
                                   double eps);

// The shipped net catalog: the four idempotent nets (default radii) and the
// constant nets |t| <= 8 for the subshift; an identity net probed on the
// given points and the constant nets for the torus.
std::vector<TimeNet> net_catalog(const SystemSpec& sys,
                                 const std::vector<TorusPoint>& probe = {},
                                 std::int64_t horizon = kDefaultNetHorizon);

struct DStarCrossCheck {
  // One entry per converged catalog cluster set: its label, the nearest
  // d_star member, and their Hausdorff distance.
  std::vector<std::string> labels;
  std::vector<std::size_t> nearest_member;
  std::vector<double> distance;
  bool all_covered = false;  // every entry within 2*eps of some member
};

// Cross-check that every catalog cluster set is represented inside the
// orbit-closure estimate.
DStarCrossCheck d_star_crosscheck(const FiniteClosedSet& A,
                                  const DStarEstimate& estimate, double eps,
                                  std::int64_t horizon);

}  // namespace hyperlab
