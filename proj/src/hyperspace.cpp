#include "hyperlab/hyperspace.hpp"

#include <algorithm>
#include <stdexcept>

namespace hyperlab {

bool same_system(const SystemSpec& a, const SystemSpec& b) {
  if (a.kind != b.kind) return false;
  if (a.kind == SystemKind::SubstitutionSubshift) return a.subst == b.subst;
  return a.alpha == b.alpha;
}

FiniteClosedSet make_closed_set(const SystemSpec& sys, std::vector<Point> points,
                                double resolution) {
  if (points.empty())
    throw std::invalid_argument("closed set stand-ins must be nonempty");
  if (!(resolution > 0.0))
    throw std::invalid_argument("resolution must be positive");
  for (const auto& p : points) require_in_system(sys, p);
  std::sort(points.begin(), points.end(), point_less);

  // Drop points indistinguishable at the comparison horizon, keeping the
  // canonically first representative.
  std::vector<Point> kept;
  for (const auto& p : points) {
    bool dup = false;
    for (const auto& q : kept) {
      if (points_agree(sys, p, q)) {
        dup = true;
        break;
      }
    }
    if (!dup) kept.push_back(p);
  }
  FiniteClosedSet out;
  out.system = sys;
  out.points = std::move(kept);
  out.resolution = resolution;
  return out;
}

namespace {

void require_same_system(const FiniteClosedSet& A, const FiniteClosedSet& B) {
  if (!same_system(A.system, B.system))
    throw std::invalid_argument("closed sets belong to different systems");
}

}  // namespace

double hausdorff(const FiniteClosedSet& A, const FiniteClosedSet& B) {
  require_same_system(A, B);
  double h = 0.0;
  for (int dir = 0; dir < 2; ++dir) {
    const auto& from = (dir == 0) ? A.points : B.points;
    const auto& to = (dir == 0) ? B.points : A.points;
    for (const auto& p : from) {
      double nearest = 2.0;
      for (const auto& q : to)
        nearest = std::min(nearest, point_distance(A.system, p, q));
      h = std::max(h, nearest);
    }
  }
  return h;
}

bool hausdorff_within(const FiniteClosedSet& A, const FiniteClosedSet& B,
                      double eps) {
  require_same_system(A, B);
  for (int dir = 0; dir < 2; ++dir) {
    const auto& from = (dir == 0) ? A.points : B.points;
    const auto& to = (dir == 0) ? B.points : A.points;
    for (const auto& p : from) {
      bool covered = false;
      for (const auto& q : to) {
        if (point_distance(A.system, p, q) <= eps) {
          covered = true;
          break;
        }
      }
      if (!covered) return false;
    }
  }
  return true;
}

bool vietoris_contains(const FiniteClosedSet& A, const BallCover& cover) {
  if (cover.empty())
    throw std::invalid_argument("ball covers must be nonempty");
  for (const auto& b : cover) require_in_system(A.system, b.center);
  for (const auto& p : A.points) {
    bool inside = false;
    for (const auto& b : cover) {
      if (point_distance(A.system, p, b.center) <= b.radius) {
        inside = true;
        break;
      }
    }
    if (!inside) return false;  // a point of A escapes the union
  }
  for (const auto& b : cover) {
    bool met = false;
    for (const auto& p : A.points) {
      if (point_distance(A.system, p, b.center) <= b.radius) {
        met = true;
        break;
      }
    }
    if (!met) return false;  // a ball misses A
  }
  return true;
}

FiniteClosedSet induced_step(const FiniteClosedSet& A, std::int64_t t) {
  std::vector<Point> moved;
  moved.reserve(A.points.size());
  for (const auto& p : A.points) moved.push_back(shift_point(A.system, p, t));
  return make_closed_set(A.system, std::move(moved), A.resolution);
}

FiniteClosedSet set_union(const FiniteClosedSet& A, const FiniteClosedSet& B) {
  require_same_system(A, B);
  std::vector<Point> all = A.points;
  all.insert(all.end(), B.points.begin(), B.points.end());
  return make_closed_set(A.system, std::move(all),
                         std::min(A.resolution, B.resolution));
}

}  // namespace hyperlab
