#include "hyperlab/torus.hpp"

#include <cmath>
#include <stdexcept>

namespace hyperlab {

namespace {

void require_torus(const SystemSpec& sys) {
  if (sys.kind != SystemKind::TorusSkew)
    throw std::invalid_argument("operation needs a torus skew system");
}

// n(n-1)/2 without overflow for |n| <= ~3e9; exact integer for every n.
std::int64_t triangular(std::int64_t n) {
  return (n % 2 == 0) ? (n / 2) * (n - 1) : n * ((n - 1) / 2);
}

}  // namespace

double mod1(double v) {
  double r = v - std::floor(v);
  if (r >= 1.0) r = 0.0;
  if (r < 0.0) r = 0.0;
  return r;
}

double frac_mul(std::int64_t n, double v) {
  const double nd = static_cast<double>(n);
  const double hi = nd * v;
  const double lo = std::fma(nd, v, -hi);  // exact residual of the product
  return mod1((hi - std::floor(hi)) + lo);
}

TorusPoint skew_step(const SystemSpec& sys, const TorusPoint& p) {
  require_torus(sys);
  return make_torus_point(p.x + sys.alpha, p.x + p.y);
}

TorusPoint skew_step_inverse(const SystemSpec& sys, const TorusPoint& p) {
  require_torus(sys);
  return make_torus_point(p.x - sys.alpha, p.y - p.x + sys.alpha);
}

TorusPoint skew_power(const SystemSpec& sys, std::int64_t n, const TorusPoint& p) {
  require_torus(sys);
  if (n == 0) return p;
  const double na = frac_mul(n, sys.alpha);
  const double nx = frac_mul(n, p.x);
  const double ta = frac_mul(triangular(n), sys.alpha);
  return make_torus_point(p.x + na, nx + p.y + ta);
}

// Generic integer action used by shift_point.
Point torus_shift(const SystemSpec& sys, const TorusPoint& p, std::int64_t n) {
  return skew_power(sys, n, p);
}

double seed_for_target(const SystemSpec& sys, double x, double y, std::int64_t n) {
  require_torus(sys);
  if (n < 1) throw std::invalid_argument("seed_for_target needs n >= 1");
  const double half_alpha = sys.alpha * 0.5;  // exact scaling by 2^-1
  return mod1(x + (y - x) / static_cast<double>(n) - frac_mul(n - 1, half_alpha));
}

TimeSearchResult search_identity_times(const SystemSpec& sys, double x,
                                       std::int64_t horizon, double tol) {
  require_torus(sys);
  if (horizon < 2) throw std::invalid_argument("horizon must be >= 2");
  if (!(tol > 0.0)) throw std::invalid_argument("tolerance must be positive");

  TimeSearchResult res;
  res.tolerance = tol;
  res.horizon = horizon;
  res.error_budget = 2.0 * kModStepBudget;  // one reduction per constraint

  const double half_alpha = sys.alpha * 0.5;
  double best = 2.0;
  for (std::int64_t n = 2; n <= horizon; ++n) {
    const double s1 = circle_distance(frac_mul(n, x), mod1(x));
    const double s2 = circle_distance(frac_mul(n + 1, half_alpha), 0.0);
    const double score = std::max(s1, s2);
    if (score < best) {
      best = score;
      res.best_n = n;
      res.best_score = score;
    }
    if (score <= tol) {
      if (res.times.empty() || score < res.scores[res.improving.back()])
        res.improving.push_back(res.times.size());
      res.times.push_back(n);
      res.scores.push_back(score);
    }
  }
  res.found = !res.times.empty();
  return res;
}

DtDensityReport verify_dt_density(const SystemSpec& sys,
                                  const std::vector<TorusPoint>& targets,
                                  std::int64_t horizon, double tol,
                                  double report_threshold) {
  require_torus(sys);
  DtDensityReport rep;
  rep.search_tol = tol;
  rep.report_threshold = report_threshold;
  rep.horizon = horizon;
  rep.error_budget = 8.0 * kModStepBudget;  // seed + power + distance chain
  rep.all_within_threshold = true;

  for (const auto& t : targets) {
    TargetApproach ta;
    ta.x = t.x;
    ta.y = t.y;
    const TimeSearchResult search = search_identity_times(sys, t.x, horizon, tol);
    if (!search.found) {
      ta.found = false;
      ta.best_n = search.best_n;
      ta.best_score = search.best_score;
      rep.all_within_threshold = false;
      rep.targets.push_back(ta);
      continue;
    }
    ta.found = true;
    double best_dist = 2.0;
    for (std::size_t i = 0; i < search.times.size(); ++i) {
      const std::int64_t n = search.times[i];
      const double xn = seed_for_target(sys, t.x, t.y, n);
      const TorusPoint img = skew_power(sys, n, make_torus_point(xn, 0.0));
      const double d = std::max(circle_distance(img.x, t.x),
                                circle_distance(img.y, t.y));
      if (d < best_dist) {
        best_dist = d;
        ta.best_n = n;
        ta.best_score = search.scores[i];
      }
    }
    ta.approach_distance = best_dist;
    if (!(best_dist <= report_threshold + rep.error_budget))
      rep.all_within_threshold = false;
    rep.targets.push_back(ta);
  }
  return rep;
}

}  // namespace hyperlab
