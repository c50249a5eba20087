#pragma once
//
// Finite-resolution model of the induced system on closed subsets: finite
// point lists standing in for closed sets, the Hausdorff metric between
// them, Vietoris neighborhoods built from metric balls, and the elementwise
// integer action.

#include <cstdint>
#include <vector>

#include "hyperlab/system.hpp"

namespace hyperlab {

// A finite stand-in for a nonempty closed subset of X at a given resolution.
// Points are kept in the fixed total order on encodings and deduplicated at
// the comparison horizon, so equal sets compare equal.
struct FiniteClosedSet {
  SystemSpec system;
  std::vector<Point> points;
  double resolution = 0.0;
};

// Canonicalizes (sorts, dedupes) the given points. Throws on empty input,
// nonpositive resolution, or points outside the system.
FiniteClosedSet make_closed_set(const SystemSpec& sys, std::vector<Point> points,
                                double resolution);

bool same_system(const SystemSpec& a, const SystemSpec& b);

// max( sup_a inf_b d(a,b), sup_b inf_a d(a,b) ), brute force.
double hausdorff(const FiniteClosedSet& A, const FiniteClosedSet& B);

// Decision form: hausdorff(A, B) <= eps, with early exit.
bool hausdorff_within(const FiniteClosedSet& A, const FiniteClosedSet& B,
                      double eps);

struct Ball {
  Point center;
  double radius = 0.0;
};
using BallCover = std::vector<Ball>;

// Membership of A in the basic neighborhood spanned by the cover: every
// point of A lies in some ball AND every ball contains some point of A.
bool vietoris_contains(const FiniteClosedSet& A, const BallCover& cover);

// Elementwise action of the group element t; resolution unchanged.
FiniteClosedSet induced_step(const FiniteClosedSet& A, std::int64_t t);

// Canonical merged list; resolution is the finer (smaller) of the two.
FiniteClosedSet set_union(const FiniteClosedSet& A, const FiniteClosedSet& B);

}  // namespace hyperlab
