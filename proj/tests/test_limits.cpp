#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <algorithm>
#include <cmath>
#include <set>
#include <vector>

#include "hyperlab/limits.hpp"
#include "hyperlab/torus.hpp"

using namespace hyperlab;

namespace {

const SystemSpec kMorse = morse_square_system();
const SystemSpec kTorus = torus_skew_system(golden_alpha());

Point sym(BaseTag t, std::int64_t k = 0) { return make_seed_point(t, k); }

FiniteClosedSet mset(std::vector<Point> pts, double res) {
  return make_closed_set(kMorse, std::move(pts), res);
}

bool set_is(const FiniteClosedSet& s, std::vector<Point> want) {
  if (s.points.size() != want.size()) return false;
  std::sort(want.begin(), want.end(), point_less);
  for (std::size_t i = 0; i < want.size(); ++i)
    if (!points_agree(s.system, s.points[i], want[i])) return false;
  return true;
}

// Independent scan oracle for idempotent times: window-string comparison of
// all four bases plus the recorded panel (signed like the candidate).
bool oracle_time(const IdempotentTable& t, std::int64_t n, int W) {
  const Substitution& S = kMorse.subst;
  for (BaseTag b : kAllBases) {
    const auto moved = make_seed_point(b, n);
    if (window(S, moved, W) != window(S, make_seed_point(t.act(b)), W))
      return false;
  }
  const std::int64_t sgn = n < 0 ? -1 : 1;
  for (const auto& p : morse_net_panel()) {
    const std::int64_t k = sgn * std::llabs(p.shift);
    const auto moved = make_seed_point(BaseTag::A, k + n);
    if (window(S, moved, W) != window(S, make_seed_point(BaseTag::A, k), W))
      return false;
  }
  return true;
}

}  // namespace

TEST_CASE("the sample panel is fixed and off the membership horizon") {
  const auto panel = morse_net_panel();
  REQUIRE(panel.size() == 8);
  for (const auto& p : panel) {
    CHECK(p.shift > kOrbitMembershipHorizon);
    CHECK(p.seed_form());
  }
  const auto again = morse_net_panel();
  for (std::size_t i = 0; i < 8; ++i) CHECK(panel[i].shift == again[i].shift);
}

TEST_CASE("u1 net: first radius-2 time matches the exhaustive scan") {
  const auto net = timenet_for_idempotent(kMorse, table_u1(), {2}, 1 << 20);
  REQUIRE(net.times.size() == 1);
  CHECK(net.times[0] == 192);  // frozen from the scan oracle
  CHECK(oracle_time(table_u1(), 192, 2));
  for (std::int64_t n = 1; n < 192; ++n) {
    CHECK_FALSE(oracle_time(table_u1(), n, 2));
    CHECK_FALSE(oracle_time(table_u1(), -n, 2));
  }
}

TEST_CASE("net times and directions of the four idempotents") {
  const auto u1 = timenet_for_idempotent(kMorse, table_u1(), {2, 48}, 1 << 20);
  REQUIRE(u1.times.size() == 2);
  CHECK(u1.times[0] == 192);
  CHECK(u1.times[1] == 33792);
  CHECK(u1.radii[1] == 48);

  const auto v1 = timenet_for_idempotent(kMorse, table_v1(), {2, 48}, 1 << 20);
  REQUIRE(v1.times.size() == 2);
  CHECK(v1.times[0] == -192);  // the v-type tables live on the backward side
  CHECK(v1.times[1] == -33792);
  for (const auto& p : v1.panel) CHECK(p.shift < 0);

  const auto u2 = timenet_for_idempotent(kMorse, table_u2(), {2}, 1 << 20);
  CHECK(u2.times[0] == 24576);
  const auto v2 = timenet_for_idempotent(kMorse, table_v2(), {2}, 1 << 20);
  CHECK(v2.times[0] == -24576);
}

TEST_CASE("empty radii give an empty net; v-type times verified by oracle") {
  const auto net = timenet_for_idempotent(kMorse, table_u1(), {}, 1024);
  CHECK(net.kind == TimeNet::Kind::IdempotentApprox);
  CHECK(net.times.empty());
  CHECK(oracle_time(table_v1(), -192, 2));
}

TEST_CASE("the all-bases-fixed table admits no time at all") {
  // Joint self-returns of all four bases are obstructed: the forward images
  // of a and b share their windows but have different targets, and the
  // mirrored pair blocks the backward side. The scan oracle agrees.
  CHECK_THROWS_AS(timenet_for_idempotent(kMorse, identity_table(), {2}, 1 << 16),
                  EmptyNetError);
  for (std::int64_t n = 1; n <= 4096; ++n) {
    CHECK_FALSE(oracle_time(identity_table(), n, 2));
    CHECK_FALSE(oracle_time(identity_table(), -n, 2));
  }
}

TEST_CASE("unreachable radii truncate with a record") {
  const auto net = timenet_for_idempotent(kMorse, table_u1(), {2, 48}, 1000);
  CHECK(net.truncated);
  REQUIRE(net.times.size() == 1);
  CHECK(net.times[0] == 192);
  CHECK(net.note.find("truncated") != std::string::npos);
}

TEST_CASE("cluster of {a} along the u1 net is exactly {b}") {
  const auto net = timenet_for_idempotent(kMorse, table_u1(), kDefaultNetRadii,
                                          kDefaultNetHorizon);
  const auto c = cluster_set(mset({sym(BaseTag::A)}, 0x1.0p-6), net, 0x1.0p-6);
  CHECK(c.converged);
  CHECK(set_is(c.result, {sym(BaseTag::B)}));
  CHECK(c.witness == 0.0);
}

TEST_CASE("cluster of {a, abar} along u1 is {b, bbar}") {
  const auto net = timenet_for_idempotent(kMorse, table_u1(), kDefaultNetRadii,
                                          kDefaultNetHorizon);
  const auto c = cluster_set(mset({sym(BaseTag::A), sym(BaseTag::ABar)}, 0x1.0p-6),
                             net, 0x1.0p-6);
  CHECK(c.converged);
  CHECK(set_is(c.result, {sym(BaseTag::B), sym(BaseTag::BBar)}));
}

TEST_CASE("cluster along the backward v1 net snaps to the v1 image") {
  const auto net = timenet_for_idempotent(kMorse, table_v1(), kDefaultNetRadii,
                                          kDefaultNetHorizon);
  const auto c = cluster_set(mset({sym(BaseTag::A)}, 0x1.0p-6), net, 0x1.0p-6);
  CHECK(c.converged);
  CHECK(set_is(c.result, {sym(BaseTag::BBar)}));
}

TEST_CASE("finite-set rule: cluster equals the table image point-for-point") {
  const auto net = timenet_for_idempotent(kMorse, table_u1(), kDefaultNetRadii,
                                          kDefaultNetHorizon);
  SplitMix64 rng(61);
  std::vector<Point> pool;
  for (BaseTag b : kAllBases)
    for (std::int64_t k = -2; k <= 2; ++k) pool.push_back(sym(b, k));
  for (int trial = 0; trial < 40; ++trial) {
    std::vector<Point> pts;
    const int sz = 1 + static_cast<int>(rng.next() % 3);
    for (int i = 0; i < sz; ++i) pool.size(), pts.push_back(pool[rng.next() % pool.size()]);
    const auto A = mset(pts, 0x1.0p-6);
    const auto c = cluster_set(A, net, 0x1.0p-6);
    const auto img = apply_to_finite_set(table_u1(), A);
    REQUIRE(c.converged);
    REQUIRE(c.result.points.size() == img.points.size());
    for (std::size_t i = 0; i < img.points.size(); ++i)
      CHECK(points_agree(kMorse, c.result.points[i], img.points[i]));
  }
}

TEST_CASE("group-element exactness: constant nets reproduce induced_step") {
  const auto A = mset({sym(BaseTag::A), sym(BaseTag::B), sym(BaseTag::ABar),
                       sym(BaseTag::BBar)},
                      0x1.0p-12);
  for (std::int64_t t = -8; t <= 8; ++t) {
    const auto c = cluster_set(A, constant_net(kMorse, t), 0x1.0p-12);
    CHECK(c.converged);
    CHECK(hausdorff(c.result, induced_step(A, t)) == 0.0);
  }
}

TEST_CASE("idempotency: double application changes nothing") {
  for (const auto& table : shipped_tables()) {
    const auto net = timenet_for_idempotent(kMorse, table, kDefaultNetRadii,
                                            kDefaultNetHorizon);
    for (const auto& pts : {std::vector<Point>{sym(BaseTag::A), sym(BaseTag::B)},
                            std::vector<Point>{sym(BaseTag::ABar, 1)},
                            std::vector<Point>{sym(BaseTag::A), sym(BaseTag::BBar, -2)}}) {
      const auto once = cluster_set(mset(pts, 0x1.0p-5), net, 0x1.0p-5);
      REQUIRE(once.converged);
      const auto twice = cluster_set(once.result, net, 0x1.0p-5);
      REQUIRE(twice.converged);
      CHECK(hausdorff(once.result, twice.result) <= 0x1.0p-5);
    }
  }
}

TEST_CASE("containment: the table image sits inside the cluster") {
  const auto net = timenet_for_idempotent(kMorse, table_u1(), kDefaultNetRadii,
                                          kDefaultNetHorizon);
  // Base-orbit points plus a panel-style far point (certified by the net).
  const auto panel = morse_net_panel();
  const double eps = 0x1.0p-5;
  const auto A = mset({sym(BaseTag::A, 1), sym(BaseTag::B), Point{panel[0]}}, eps);
  const auto c = cluster_set(A, net, eps);
  const auto img = apply_to_finite_set(table_u1(), A);
  for (const auto& p : img.points) {
    double best = 2.0;
    for (const auto& q : c.result.points)
      best = std::min(best, point_distance(kMorse, p, q));
    CHECK(best <= eps);
  }
}

TEST_CASE("proximal absorption: {b} and {a, b} cluster alike along u1") {
  const auto net = timenet_for_idempotent(kMorse, table_u1(), kDefaultNetRadii,
                                          kDefaultNetHorizon);
  const double eps = 0x1.0p-5;
  const auto cb = cluster_set(mset({sym(BaseTag::B)}, eps), net, eps);
  const auto cab = cluster_set(mset({sym(BaseTag::A), sym(BaseTag::B)}, eps), net, eps);
  REQUIRE(cb.converged);
  REQUIRE(cab.converged);
  CHECK(hausdorff(cb.result, cab.result) <= eps);
}

TEST_CASE("cluster of a dense stand-in stays dense") {
  const auto net = timenet_for_idempotent(kMorse, table_u1(), kDefaultNetRadii,
                                          kDefaultNetHorizon);
  const double eps = 0x1.0p-3;
  const auto S = x_standin_interval(kMorse, 2048, eps);
  const auto c = cluster_set(S, net, eps);
  const auto ref = x_standin(kMorse, eps);
  for (const auto& p : ref.points) {
    double best = 2.0;
    for (const auto& q : c.result.points)
      best = std::min(best, point_distance(kMorse, p, q));
    CHECK(best <= 3.0 * eps);
  }
}

TEST_CASE("non-stabilizing accumulations are flagged, never silent") {
  TimeNet wild;
  wild.kind = TimeNet::Kind::Raw;
  wild.system = SystemKind::SubstitutionSubshift;
  wild.label = "wild";
  wild.times = {1, 5, 17};
  const auto c = cluster_set(mset({sym(BaseTag::A)}, 0x1.0p-6), wild, 0x1.0p-6);
  CHECK_FALSE(c.converged);
  CHECK(!c.note.empty() || c.witness > 0x1.0p-6);
}

TEST_CASE("cluster_set rejects empty nets and mixed systems") {
  TimeNet empty;
  empty.system = SystemKind::SubstitutionSubshift;
  CHECK_THROWS_AS(cluster_set(mset({sym(BaseTag::A)}, 0.1), empty, 0.1),
                  std::invalid_argument);
  CHECK_THROWS_AS(cluster_set(mset({sym(BaseTag::A)}, 0.1),
                              constant_net(kTorus, 1), 0.1),
                  std::invalid_argument);
}

TEST_CASE("torus identity net clusters a set back onto itself") {
  std::vector<TorusPoint> probe = {make_torus_point(0.2, 0.7),
                                   make_torus_point(0.55, 0.1)};
  const auto net = identity_timenet(kTorus, probe, 2000000);
  REQUIRE(!net.times.empty());
  for (std::size_t i = 1; i < net.scores.size(); ++i)
    CHECK(net.scores[i] < net.scores[i - 1]);
  std::vector<Point> pts;
  for (const auto& p : probe) pts.push_back(p);
  const double eps = 0.05;
  const auto A = make_closed_set(kTorus, pts, eps);
  const auto c = cluster_set(A, net, eps);
  if (c.converged) CHECK(hausdorff(c.result, A) <= eps);
  CHECK(c.times_used >= 1);
}

TEST_CASE("compose_nets: constants add exactly") {
  const auto net = compose_nets(constant_net(kMorse, 3), constant_net(kMorse, 5));
  REQUIRE(net.times.size() == 1);
  CHECK(net.times[0] == 8);
  const auto A = mset({sym(BaseTag::A), sym(BaseTag::ABar)}, 0x1.0p-10);
  const auto c = cluster_set(A, net, 0x1.0p-10);
  CHECK(hausdorff(c.result, induced_step(A, 8)) == 0.0);
}

TEST_CASE("compose_nets: u1 after v1 clusters {a} near b-bar") {
  // Composed certificates cost |outer time| of the inner radius, so the
  // outer net is taken shallow and the example is checked at eps = 2^-2.
  const auto outer = timenet_for_idempotent(kMorse, table_u1(), {2}, 1 << 20);
  const auto inner = timenet_for_idempotent(kMorse, table_v1(), {194}, 1 << 20);
  const auto net = compose_nets(outer, inner);
  REQUIRE(net.times.size() == 1);
  CHECK(net.times[0] == outer.times[0] + inner.times[0]);
  REQUIRE(net.table.has_value());
  CHECK(net.table->same_action(table_v1()));  // u1 v1 = v1 as tables
  const auto c = cluster_set(mset({sym(BaseTag::A)}, 0.25), net, 0.25);
  CHECK(c.converged);
  CHECK(hausdorff(c.result, mset({sym(BaseTag::BBar)}, 0.25)) <= 0.25);
}

TEST_CASE("compose_nets: u1 after u1 stays u1 at resolution") {
  const auto outer = timenet_for_idempotent(kMorse, table_u1(), {2}, 1 << 20);
  const auto inner = timenet_for_idempotent(kMorse, table_u1(), {194}, 1 << 20);
  const auto net = compose_nets(outer, inner);
  const auto c = cluster_set(mset({sym(BaseTag::A)}, 0.25), net, 0.25);
  CHECK(c.converged);
  CHECK(hausdorff(c.result, mset({sym(BaseTag::B)}, 0.25)) <= 0.25);
}

TEST_CASE("recurrence: the whole-space stand-in returns at every time") {
  const auto S = x_standin_interval(kMorse, 1024, 0x1.0p-3);
  const auto rep = recurrence_report(S, 0x1.0p-3, 64);
  CHECK(rep.verdict == RecurrenceVerdict::SyndeticAtHorizon);
  CHECK(rep.return_times.size() == 64);
  CHECK(rep.max_gap == 1);
}

TEST_CASE("recurrence dichotomy: {b, bbar} vs {a, b}") {
  const auto bb = mset({sym(BaseTag::B), sym(BaseTag::BBar)}, 0x1.0p-4);
  const auto r1 = recurrence_report(bb, 0x1.0p-4, 1 << 12);
  CHECK(r1.verdict == RecurrenceVerdict::SyndeticAtHorizon);
  CHECK(r1.max_gap == 8);  // frozen from the scan oracle

  const auto ab = mset({sym(BaseTag::A), sym(BaseTag::B)}, 0x1.0p-4);
  const auto r2 = recurrence_report(ab, 0x1.0p-4, 1 << 12);
  CHECK(r2.verdict == RecurrenceVerdict::GapGrowth);
  CHECK(r2.return_times.empty());
  CHECK(r2.second_half_max_gap >= 4 * std::max<std::int64_t>(r2.first_half_max_gap, 1) ||
        r2.first_half_max_gap == 0);
  CHECK_THROWS_AS(recurrence_report(bb, 0x1.0p-4, 8), std::invalid_argument);
}

TEST_CASE("recurrence returns agree with a naive rescan") {
  const auto bb = mset({sym(BaseTag::B), sym(BaseTag::BBar)}, 0x1.0p-3);
  const auto rep = recurrence_report(bb, 0x1.0p-3, 512);
  std::vector<std::int64_t> oracle;
  for (std::int64_t n = 1; n <= 512; ++n) {
    if (hausdorff(induced_step(bb, n), bb) <= 0x1.0p-3) oracle.push_back(n);
  }
  REQUIRE(rep.return_times.size() == oracle.size());
  for (std::size_t i = 0; i < oracle.size(); ++i)
    CHECK(rep.return_times[i] == oracle[i]);
}

TEST_CASE("almost periodic tuples: dichotomy over the base pairs") {
  // A pair is almost periodic exactly when some shipped table fixes both
  // coordinates.
  const std::vector<std::pair<BaseTag, BaseTag>> pairs = {
      {BaseTag::A, BaseTag::B},    {BaseTag::A, BaseTag::ABar},
      {BaseTag::A, BaseTag::BBar}, {BaseTag::B, BaseTag::ABar},
      {BaseTag::B, BaseTag::BBar}, {BaseTag::ABar, BaseTag::BBar}};
  for (const auto& [x, y] : pairs) {
    bool fixed_by_some = false;
    for (const auto& t : shipped_tables())
      fixed_by_some = fixed_by_some ||
                      (t.act(x) == x && t.act(y) == y);
    const auto rep = ap_set_test(kMorse, {sym(x), sym(y)}, 0x1.0p-4, 1 << 12);
    CHECK((rep.verdict == RecurrenceVerdict::SyndeticAtHorizon) == fixed_by_some);
  }
  // Singletons of a minimal flow are almost periodic.
  const auto solo = ap_set_test(kMorse, {sym(BaseTag::A)}, 0x1.0p-4, 1 << 12);
  CHECK(solo.verdict == RecurrenceVerdict::SyndeticAtHorizon);
}

TEST_CASE("proximal pairs and their rates") {
  const auto ab = proximal_pair(kMorse, sym(BaseTag::A), sym(BaseTag::B), 1 << 14);
  CHECK(ab.verdict == PairVerdict::ProximalAtHorizon);
  for (int n = 1; n <= 32; ++n) {
    const double d = point_distance(kMorse, sym(BaseTag::A, n), sym(BaseTag::B, n));
    CHECK(d == std::ldexp(1.0, -(n + 1)));
  }
  const auto aab = proximal_pair(kMorse, sym(BaseTag::A), sym(BaseTag::ABar), 10000);
  CHECK(aab.verdict == PairVerdict::DistalAtHorizon);
  CHECK(aab.inf_over_horizon == 1.0);
  const auto same = proximal_pair(kMorse, sym(BaseTag::A), sym(BaseTag::A), 100);
  CHECK(same.verdict == PairVerdict::ProximalAtHorizon);
  CHECK(same.inf_over_horizon == 0.0);
}

TEST_CASE("proximal pair on the torus: invariant fiber gap is distal") {
  const auto p = make_torus_point(0.3, 0.1);
  const auto q = make_torus_point(0.3, 0.4);
  const auto rep = proximal_pair(kTorus, p, q, 100000);
  CHECK(rep.verdict == PairVerdict::DistalAtHorizon);
  CHECK(rep.inf_over_horizon == doctest::Approx(0.3).epsilon(1e-9));
}

TEST_CASE("prolongation of a point contains its pruned forward orbit") {
  const double eps = 0x1.0p-3;
  const auto est = prolongation_point(kMorse, sym(BaseTag::A), 0x1.0p-3, 4, 512, eps);
  std::vector<Point> orbit;
  for (std::int64_t n = 0; n <= 512; ++n) orbit.push_back(sym(BaseTag::A, n));
  const auto pruned = epsilon_net_prune(orbit, eps, kMorse);
  for (const auto& p : pruned) {
    bool found = false;
    for (const auto& q : est.points) found = found || points_agree(kMorse, p, q);
    CHECK(found);
  }
}

TEST_CASE("prolongation of the base point is dense in the stand-in") {
  const double eps = 0x1.0p-3;
  const auto est = prolongation_point(kMorse, sym(BaseTag::A), 0x1.0p-3, 4, 512, eps);
  const auto ref = x_standin(kMorse, eps);
  for (const auto& p : ref.points) {
    double best = 2.0;
    for (const auto& q : est.points)
      best = std::min(best, point_distance(kMorse, p, q));
    CHECK(best <= eps);
  }
}

TEST_CASE("prolongation of the torus origin fills the grid stand-in") {
  const double eps = 0.1;
  const auto est = prolongation_point(kTorus, make_torus_point(0, 0), 0.1, 5,
                                      20000, eps);
  const auto ref = x_standin(kTorus, eps);
  double worst = 0.0;
  for (const auto& p : ref.points) {
    double best = 2.0;
    for (const auto& q : est.points)
      best = std::min(best, point_distance(kTorus, p, q));
    worst = std::max(worst, best);
  }
  CHECK(worst <= 2.0 * eps);
}

TEST_CASE("d_star of the dense stand-in is a single member") {
  const auto S = x_standin_interval(kMorse, 1024, 0x1.0p-3);
  const auto est = d_star_estimate(S, 256, 0x1.0p-3);
  CHECK(est.members.size() == 1);
  CHECK(est.times == std::vector<std::int64_t>{0});
}

TEST_CASE("d_star of {b, bbar}: complement-symmetric members") {
  const auto bb = mset({sym(BaseTag::B), sym(BaseTag::BBar)}, 0x1.0p-4);
  const auto est = d_star_estimate(bb, 1 << 12, 0x1.0p-4);
  CHECK(est.members.size() >= 4);
  for (const auto& m : est.members) {
    REQUIRE(m.points.size() == 2);
    const auto& p = std::get<SymbolicPoint>(m.points[0]);
    const auto& q = std::get<SymbolicPoint>(m.points[1]);
    REQUIRE(p.seed_form());
    REQUIRE(q.seed_form());
    CHECK(*q.base == dual(*p.base));
    CHECK(p.shift == q.shift);
  }
}

TEST_CASE("d_star of {a, b} reaches {b} along the forward times") {
  const double eps = 0x1.0p-4;
  const auto ab = mset({sym(BaseTag::A), sym(BaseTag::B)}, eps);
  const auto est = d_star_estimate(ab, 1 << 16, eps);
  const auto just_b = mset({sym(BaseTag::B)}, eps);
  double best = 2.0;
  for (const auto& m : est.members) best = std::min(best, hausdorff(m, just_b));
  CHECK(best <= eps);
}

TEST_CASE("d_star cross-check: catalog clusters are represented") {
  const double eps = 0x1.0p-4;
  const auto ab = mset({sym(BaseTag::A), sym(BaseTag::B)}, eps);
  const auto est = d_star_estimate(ab, 1 << 16, eps);
  const auto check = d_star_crosscheck(ab, est, eps, kDefaultNetHorizon);
  CHECK(check.all_covered);
  CHECK(!check.labels.empty());
  for (const double d : check.distance) CHECK(d <= 2.0 * eps);
}

TEST_CASE("quasifactor verdicts") {
  // The trivial quasifactor.
  const auto whole = x_standin_interval(kMorse, 512, 0x1.0p-3);
  const auto trivial = quasifactor_check({whole}, 0x1.0p-3, 64);
  CHECK(trivial.minimal);

  const double eps = 0x1.0p-4;
  const auto bb = mset({sym(BaseTag::B), sym(BaseTag::BBar)}, eps);
  const auto est_bb = d_star_estimate(bb, 1 << 12, eps);
  const auto q1 = quasifactor_check(est_bb.members, eps, 1 << 12);
  CHECK(q1.minimal);

  const auto ab = mset({sym(BaseTag::A), sym(BaseTag::B)}, eps);
  const auto est_ab = d_star_estimate(ab, 1 << 12, eps);
  const auto q2 = quasifactor_check(est_ab.members, eps, 1 << 12);
  CHECK_FALSE(q2.minimal);
  REQUIRE(q2.witness.has_value());
  // The witness names a member whose forward orbit misses the target.
  const auto& [i, j] = *q2.witness;
  const auto& M = est_ab.members[i];
  std::vector<Point> cur = M.points;
  bool reached = false;
  for (std::int64_t n = 1; n <= (1 << 12) && !reached; ++n) {
    std::vector<Point> next;
    for (const auto& p : cur) next.push_back(shift_point(kMorse, p, 1));
    cur = next;
    reached = hausdorff(make_closed_set(kMorse, cur, eps), est_ab.members[j]) <= eps;
  }
  CHECK_FALSE(reached);
}

TEST_CASE("x_standin covers the window classes of arbitrary points") {
  const double eps = 0x1.0p-3;
  const auto ref = x_standin(kMorse, eps);
  std::set<std::string> keys;
  const std::int64_t D = 3;
  for (const auto& p : ref.points)
    keys.insert(window(kMorse.subst, std::get<SymbolicPoint>(p), D));
  SplitMix64 rng(2);
  for (int i = 0; i < 200; ++i) {
    const auto p = make_seed_point(kAllBases[rng.next() % 4], rng.next_in(-1000, 1000));
    CHECK(keys.count(window(kMorse.subst, p, D)) == 1);
  }
}
