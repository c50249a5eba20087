#include "hyperlab/system.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <limits>
#include <stdexcept>

namespace hyperlab {

// Defined in torus.cpp; keeps all skew arithmetic in one place.
Point torus_shift(const SystemSpec& sys, const TorusPoint& p, std::int64_t n);

SystemSpec morse_square_system() {
  SystemSpec s;
  s.kind = SystemKind::SubstitutionSubshift;
  s.subst = morse_square();
  s.subst.length();
  return s;
}

namespace {

// Exact lowest-terms denominator of a double (every finite double is a
// dyadic rational m * 2^e with m odd).
std::uint64_t dyadic_denominator(double v) {
  int e = 0;
  const double fr = std::frexp(std::fabs(v), &e);  // v = fr * 2^e, fr in [0.5,1)
  auto mant = static_cast<std::uint64_t>(std::ldexp(fr, 53));
  if (mant == 0) return 1;
  const int tz = std::countr_zero(mant);
  const int exp2 = e - 53 + tz;
  if (exp2 >= 0) return 1;
  if (-exp2 >= 64) return std::numeric_limits<std::uint64_t>::max();
  return std::uint64_t{1} << (-exp2);
}

}  // namespace

SystemSpec torus_skew_system(double alpha) {
  if (!(alpha > 0.0 && alpha < 1.0))
    throw std::invalid_argument("alpha must lie in (0,1)");
  if (dyadic_denominator(alpha) <= 1000000ull)
    throw std::invalid_argument("alpha equals a ratio p/q with q <= 10^6");
  SystemSpec s;
  s.kind = SystemKind::TorusSkew;
  s.alpha = alpha;
  return s;
}

double golden_alpha() { return (std::sqrt(5.0) - 1.0) / 2.0; }

void require_in_system(const SystemSpec& sys, const Point& p) {
  const bool sym = sys.kind == SystemKind::SubstitutionSubshift;
  if (sym != is_symbolic(p))
    throw std::invalid_argument("point does not belong to the given system");
}

double circle_distance(double u, double v) {
  double d = std::fabs(u - v);
  d = d - std::floor(d);
  return std::min(d, 1.0 - d);
}

Disagreement first_disagreement(const Substitution& s, const SymbolicPoint& x,
                                const SymbolicPoint& y, std::int64_t horizon) {
  if (x == y) return {std::nullopt, horizon};
  for (std::int64_t m = 0; m < horizon; ++m) {
    bool unknown = false;
    for (std::int64_t k : {-m, m}) {
      if (k == 0 && m != 0) continue;
      auto lx = letter_at(s, x, k);
      auto ly = letter_at(s, y, k);
      if (!lx || !ly) {
        unknown = true;
        continue;
      }
      if (*lx != *ly) return {m, m};
    }
    // A window ran out at radius m: agreement is certified below m only.
    if (unknown) return {std::nullopt, m};
  }
  return {std::nullopt, horizon};
}

namespace {

double dyadic_value(std::int64_t m) {
  if (m >= 1074) return 0.0;
  return std::ldexp(1.0, static_cast<int>(-m));
}

}  // namespace

double point_distance(const SystemSpec& sys, const Point& x, const Point& y) {
  require_in_system(sys, x);
  require_in_system(sys, y);
  if (sys.kind == SystemKind::TorusSkew) {
    const auto& a = std::get<TorusPoint>(x);
    const auto& b = std::get<TorusPoint>(y);
    return std::max(circle_distance(a.x, b.x), circle_distance(a.y, b.y));
  }
  const auto& a = std::get<SymbolicPoint>(x);
  const auto& b = std::get<SymbolicPoint>(y);
  const Disagreement d = first_disagreement(sys.subst, a, b);
  if (d.index) return dyadic_value(*d.index);
  if (d.certified >= kComparisonRadius) return 0.0;
  // Knowledge exhausted: agreement certified to d.certified, so the distance
  // is reported as the conservative upper bound 2^-certified.
  return dyadic_value(d.certified);
}

bool symbolic_within(const Substitution& s, const SymbolicPoint& x,
                     const SymbolicPoint& y, std::int64_t depth) {
  const Disagreement d =
      first_disagreement(s, x, y, std::min(depth, kComparisonRadius));
  if (d.index) return false;
  return d.certified >= std::min(depth, kComparisonRadius);
}

bool points_agree(const SystemSpec& sys, const Point& x, const Point& y) {
  require_in_system(sys, x);
  require_in_system(sys, y);
  if (sys.kind == SystemKind::TorusSkew)
    return torus_same(std::get<TorusPoint>(x), std::get<TorusPoint>(y));
  return !first_disagreement(sys.subst, std::get<SymbolicPoint>(x),
                             std::get<SymbolicPoint>(y))
              .index.has_value();
}

Point shift_point(const SystemSpec& sys, const Point& p, std::int64_t n) {
  require_in_system(sys, p);
  if (sys.kind == SystemKind::SubstitutionSubshift)
    return shift_symbolic(std::get<SymbolicPoint>(p), n);
  return torus_shift(sys, std::get<TorusPoint>(p), n);
}

std::vector<Point> epsilon_net_prune(const std::vector<Point>& points,
                                     double eps, const SystemSpec& sys) {
  if (eps <= 0.0) throw std::invalid_argument("eps must be positive");
  std::vector<Point> kept;
  for (const auto& p : points) {
    require_in_system(sys, p);
    bool blocked = false;
    for (const auto& q : kept) {
      if (point_distance(sys, p, q) <= eps / 2.0) {
        blocked = true;
        break;
      }
    }
    if (!blocked) kept.push_back(p);
  }
  return kept;
}

std::uint64_t SplitMix64::next() {
  state += 0x9e3779b97f4a7c15ull;
  std::uint64_t z = state;
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
  return z ^ (z >> 31);
}

double SplitMix64::next_unit() {
  return static_cast<double>(next() >> 11) * 0x1.0p-53;
}

std::int64_t SplitMix64::next_in(std::int64_t lo, std::int64_t hi) {
  const auto span = static_cast<std::uint64_t>(hi - lo + 1);
  return lo + static_cast<std::int64_t>(next() % span);
}

}  // namespace hyperlab
