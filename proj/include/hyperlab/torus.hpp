#pragma once
//
// The torus skew product T(x,y) = (x + alpha, x + y) and the machinery
// around it: closed-form powers, seed points aimed at a target, and
// exhaustive searches for times along which T^n acts like the identity on
// the relevant circle constraints.
//
// All mod-1 arithmetic routes products n*v through an exact fma two-product
// followed by a single reduction, so each evaluated quantity carries at most
// a couple of reductions of rounding error. Report-level comparisons add
// kModStepBudget per reduction explicitly.

#include <cstdint>
#include <vector>

#include "hyperlab/system.hpp"

namespace hyperlab {

// v reduced into [0,1).
double mod1(double v);

// n*v mod 1 with the product split exactly (fma) before the reduction.
double frac_mul(std::int64_t n, double v);

// One application of T. Requires a torus system.
TorusPoint skew_step(const SystemSpec& sys, const TorusPoint& p);

// Explicit inverse (x - alpha, y - x + alpha).
TorusPoint skew_step_inverse(const SystemSpec& sys, const TorusPoint& p);

// Closed form T^n(x,y) = (x + n a, n x + y + n(n-1)/2 a), valid for every
// integer n (n(n-1)/2 is integral for negative n too).
TorusPoint skew_power(const SystemSpec& sys, std::int64_t n, const TorusPoint& p);

// The seed x_n = x + (y-x)/n - (n-1)/2 a (mod 1): the first coordinate of a
// point on T x {0} whose n-th image lands near (x,y) whenever n satisfies
// the identity constraints below. Throws std::invalid_argument for n < 1.
double seed_for_target(const SystemSpec& sys, double x, double y, std::int64_t n);

// Result of a constrained time search over n in [2, horizon].
struct TimeSearchResult {
  std::vector<std::int64_t> times;  // all hits, ascending
  std::vector<double> scores;       // parallel to times
  // Certificate: indices (into times) of the running-best subsequence, along
  // which scores are strictly decreasing.
  std::vector<std::size_t> improving;
  double tolerance = 0.0;
  std::int64_t horizon = 0;
  bool found = false;
  std::int64_t best_n = 0;   // argmin of the score over the whole scan
  double best_score = 0.0;
  double error_budget = 0.0;  // additive allowance per reported score
};

// Scores each n in [2, horizon] by
//   max( circledist(n x, x), circledist((n+1) a/2, 0) )
// and returns every n with score <= tol. These are exactly the times making
// T^n(seed_for_target(x, y, n), 0) approach (x, y), for any y.
TimeSearchResult search_identity_times(const SystemSpec& sys, double x,
                                       std::int64_t horizon, double tol);

struct TargetApproach {
  double x = 0.0, y = 0.0;
  bool found = false;
  std::int64_t best_n = 0;       // achieving time (or argmin score if !found)
  double best_score = 0.0;       // search score at best_n
  double approach_distance = 0.0;  // min over found n of d(T^n(x_n,0),(x,y))
};

struct DtDensityReport {
  std::vector<TargetApproach> targets;
  double search_tol = 0.0;
  double report_threshold = 0.0;
  std::int64_t horizon = 0;
  double error_budget = 0.0;
  bool all_within_threshold = false;  // found targets only; false if any miss
};

// For each target, runs search_identity_times and takes the best approach
// over the found times. Not-found targets appear as explicit failure records.
DtDensityReport verify_dt_density(const SystemSpec& sys,
                                  const std::vector<TorusPoint>& targets,
                                  std::int64_t horizon, double tol,
                                  double report_threshold);

}  // namespace hyperlab
