#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <algorithm>
#include <cmath>
#include <vector>

#include "hyperlab/system.hpp"

using namespace hyperlab;

namespace {

const SystemSpec kMorse = morse_square_system();
const SystemSpec kTorus = torus_skew_system(golden_alpha());

Point sym(BaseTag t, std::int64_t k = 0) { return make_seed_point(t, k); }

// Reference greedy pruning, straight from the contract.
std::vector<Point> naive_prune(const std::vector<Point>& pts, double eps,
                               const SystemSpec& sys) {
  std::vector<Point> kept;
  for (const auto& p : pts) {
    bool blocked = false;
    for (const auto& q : kept)
      blocked = blocked || point_distance(sys, p, q) <= eps / 2.0;
    if (!blocked) kept.push_back(p);
  }
  return kept;
}

}  // namespace

TEST_CASE("system construction validates alpha") {
  CHECK_NOTHROW(torus_skew_system(golden_alpha()));
  CHECK_THROWS_AS(torus_skew_system(0.5), std::invalid_argument);
  CHECK_THROWS_AS(torus_skew_system(1.0 / 65536.0), std::invalid_argument);
  CHECK_THROWS_AS(torus_skew_system(0.0), std::invalid_argument);
  CHECK_THROWS_AS(torus_skew_system(1.0), std::invalid_argument);
  CHECK_THROWS_AS(torus_skew_system(-0.3), std::invalid_argument);
}

TEST_CASE("point_distance: torus circle distance wraps") {
  const Point p = make_torus_point(0.1, 0.0);
  const Point q = make_torus_point(0.9, 0.0);
  CHECK(point_distance(kTorus, p, q) == doctest::Approx(0.2).epsilon(1e-12));
}

TEST_CASE("point_distance: symbolic identity and complement") {
  CHECK(point_distance(kMorse, sym(BaseTag::A), sym(BaseTag::A)) == 0.0);
  CHECK(point_distance(kMorse, sym(BaseTag::A), sym(BaseTag::ABar)) == 1.0);
}

TEST_CASE("point_distance rejects mixed systems") {
  CHECK_THROWS_AS(point_distance(kMorse, sym(BaseTag::A), make_torus_point(0, 0)),
                  std::invalid_argument);
}

TEST_CASE("symbolic distances are dyadic") {
  SplitMix64 rng(11);
  for (int i = 0; i < 200; ++i) {
    const Point p = sym(kAllBases[rng.next() % 4], rng.next_in(-64, 64));
    const Point q = sym(kAllBases[rng.next() % 4], rng.next_in(-64, 64));
    const double d = point_distance(kMorse, p, q);
    if (d > 0.0) {
      const double l = std::log2(d);
      CHECK(l == std::round(l));
    }
    CHECK(d >= 0.0);
    CHECK(d <= 1.0);
  }
}

TEST_CASE("windows of the four fixed points") {
  const Substitution& S = kMorse.subst;
  CHECK(window(S, make_seed_point(BaseTag::A), 4) == "10011001");
  CHECK(window(S, make_seed_point(BaseTag::B), 4) == "01101001");
  CHECK(window(S, make_seed_point(BaseTag::ABar), 4) == "01100110");
  CHECK(window(S, make_seed_point(BaseTag::BBar), 4) == "10010110");
}

TEST_CASE("window(r) is the centered sub-word of window(2r)") {
  const Substitution& S = kMorse.subst;
  for (BaseTag t : kAllBases) {
    const auto p = make_seed_point(t, 7);
    for (int r : {1, 2, 4, 16, 100}) {
      const std::string small = window(S, p, r);
      const std::string big = window(S, p, 2 * r);
      CHECK(big.substr(static_cast<std::size_t>(r), 2 * static_cast<std::size_t>(r)) == small);
    }
  }
}

TEST_CASE("window determinism across constructions") {
  const Substitution& S = kMorse.subst;
  const auto direct = make_seed_point(BaseTag::B, 5);
  auto stepped = make_seed_point(BaseTag::B, 0);
  stepped = shift_symbolic(shift_symbolic(stepped, 2), 3);
  for (int r : {1, 3, 16, 257, 4096, 16384})
    CHECK(window(S, direct, r) == window(S, stepped, r));
}

TEST_CASE("substitution fixed-point consistency") {
  // Substituting the radius-r window of a fixed point reproduces the
  // radius-4r window (the rules have length 4 and respect the center).
  const Substitution& S = kMorse.subst;
  for (BaseTag t : kAllBases) {
    const auto p = make_seed_point(t);
    for (int r : {1, 2, 8, 64})
      CHECK(substitute(S, window(S, p, r)) == window(S, p, 4 * r));
  }
}

TEST_CASE("materialized tail agrees with the digit walk") {
  const Substitution& S = kMorse.subst;
  std::string tail = "1";
  while (tail.size() < 5000) tail = substitute(S, tail);
  for (std::int64_t i = 0; i < 5000; ++i)
    CHECK(base_letter(S, BaseTag::A, i) == static_cast<Letter>(tail[i] - '0'));
}

TEST_CASE("explicit windows compare with honest upper bounds") {
  const Substitution& S = kMorse.subst;
  const auto b = make_seed_point(BaseTag::B);
  const auto piece = make_window_point(window(S, b, 8), -8);
  // Identical where known, so the distance is only the knowledge bound.
  CHECK(point_distance(kMorse, Point{piece}, Point{b}) == std::ldexp(1.0, -8));
  CHECK(points_agree(kMorse, Point{piece}, Point{b}));
  // A real disagreement inside the overlap wins.
  auto flipped = window(S, b, 8);
  flipped[8] = flipped[8] == '0' ? '1' : '0';  // index 0
  const auto bad = make_window_point(flipped, -8);
  CHECK(point_distance(kMorse, Point{bad}, Point{b}) == 1.0);
}

TEST_CASE("epsilon_net_prune: singleton and duplicate collapse") {
  const Point p = make_torus_point(0.25, 0.75);
  CHECK(epsilon_net_prune({p}, 0.1, kTorus).size() == 1);
  CHECK(epsilon_net_prune({p, p}, 0.1, kTorus).size() == 1);
  CHECK(epsilon_net_prune({}, 0.1, kTorus).empty());
}

TEST_CASE("epsilon_net_prune: 100 uniform circle points verified exhaustively") {
  std::vector<Point> pts;
  for (int i = 0; i < 100; ++i)
    pts.push_back(make_torus_point(i / 100.0, 0.0));
  const double eps = 0.1;
  const auto kept = epsilon_net_prune(pts, eps, kTorus);
  CHECK(!kept.empty());
  // Post-clause 1: retained points pairwise further than eps/2.
  for (std::size_t i = 0; i < kept.size(); ++i)
    for (std::size_t j = i + 1; j < kept.size(); ++j)
      CHECK(point_distance(kTorus, kept[i], kept[j]) > eps / 2.0);
  // Post-clause 2: every input point within eps/2 of some retained point.
  for (const auto& p : pts) {
    double best = 2.0;
    for (const auto& q : kept)
      best = std::min(best, point_distance(kTorus, p, q));
    CHECK(best <= eps / 2.0);
  }
  // Determinism: greedy in input order.
  const auto again = epsilon_net_prune(pts, eps, kTorus);
  CHECK(kept.size() == again.size());
  for (std::size_t i = 0; i < kept.size(); ++i)
    CHECK(points_agree(kTorus, kept[i], again[i]));
}

TEST_CASE("epsilon_net_prune matches the naive greedy on random input") {
  SplitMix64 rng(20260809);
  for (int trial = 0; trial < 5; ++trial) {
    std::vector<Point> sym_pts, tor_pts;
    for (int i = 0; i < 60; ++i) {
      sym_pts.push_back(sym(kAllBases[rng.next() % 4], rng.next_in(-20, 20)));
      tor_pts.push_back(make_torus_point(rng.next_unit(), rng.next_unit()));
    }
    for (double eps : {0.25, 0x1.0p-4}) {
      const auto a = epsilon_net_prune(sym_pts, eps, kMorse);
      const auto b = naive_prune(sym_pts, eps, kMorse);
      REQUIRE(a.size() == b.size());
      const auto c = epsilon_net_prune(tor_pts, eps, kTorus);
      const auto d = naive_prune(tor_pts, eps, kTorus);
      REQUIRE(c.size() == d.size());
    }
  }
}

TEST_CASE("metric axioms on random triples") {
  SplitMix64 rng(7);
  for (int i = 0; i < 500; ++i) {
    const Point x = sym(kAllBases[rng.next() % 4], rng.next_in(-128, 128));
    const Point y = sym(kAllBases[rng.next() % 4], rng.next_in(-128, 128));
    const Point z = sym(kAllBases[rng.next() % 4], rng.next_in(-128, 128));
    const double dxy = point_distance(kMorse, x, y);
    const double dyx = point_distance(kMorse, y, x);
    CHECK(dxy == dyx);
    CHECK(point_distance(kMorse, x, z) <= dxy + point_distance(kMorse, y, z));

    const Point u = make_torus_point(rng.next_unit(), rng.next_unit());
    const Point v = make_torus_point(rng.next_unit(), rng.next_unit());
    const Point w = make_torus_point(rng.next_unit(), rng.next_unit());
    const double duv = point_distance(kTorus, u, v);
    CHECK(duv == point_distance(kTorus, v, u));
    CHECK(point_distance(kTorus, u, w) <=
          duv + point_distance(kTorus, v, w) + 1e-9);
  }
}

TEST_CASE("torus points reduce into [0,1)") {
  const auto p = make_torus_point(1.75, -0.25);
  CHECK(p.x == doctest::Approx(0.75));
  CHECK(p.y == doctest::Approx(0.75));
  CHECK(p.x >= 0.0);
  CHECK(p.x < 1.0);
}
