// Scratch: cluster/snap mechanics, recurrence dichotomy, quasifactor run.
#include <chrono>
#include <cstdio>
#include <cmath>

#include "hyperlab/limits.hpp"
#include "hyperlab/torus.hpp"

using namespace hyperlab;

static double now() {
  using namespace std::chrono;
  return duration<double>(steady_clock::now().time_since_epoch()).count();
}

int main() {
  SystemSpec sys = morse_square_system();
  const auto P = [&](const FiniteClosedSet& s) {
    std::printf("{");
    for (const auto& p : s.points) std::printf(" %s", point_id(p).c_str());
    std::printf(" }");
  };

  double t0 = now();
  TimeNet u1net = timenet_for_idempotent(sys, table_u1(), kDefaultNetRadii, kDefaultNetHorizon);
  std::printf("u1-net build %.2fs times:", now() - t0);
  for (std::size_t i = 0; i < u1net.times.size(); ++i)
    std::printf(" (%lld@W%lld)", (long long)u1net.times[i], (long long)u1net.radii[i]);
  std::printf("\n");

  auto a = make_seed_point(BaseTag::A);
  auto b = make_seed_point(BaseTag::B);
  auto abar = make_seed_point(BaseTag::ABar);

  auto C1 = cluster_set(make_closed_set(sys, {Point{a}}, 0x1.0p-6), u1net, 0x1.0p-6);
  std::printf("cluster({a}, u1): ");
  P(C1.result);
  std::printf(" converged=%d witness=%g used=%lld\n", (int)C1.converged, C1.witness,
              (long long)C1.times_used);

  auto C2 = cluster_set(make_closed_set(sys, {Point{a}, Point{abar}}, 0x1.0p-6), u1net, 0x1.0p-6);
  std::printf("cluster({a,abar}, u1): ");
  P(C2.result);
  std::printf(" converged=%d\n", (int)C2.converged);

  auto C3 = cluster_set(make_closed_set(sys, {Point{a}, Point{b}}, 0x1.0p-5), u1net, 0x1.0p-5);
  std::printf("cluster({a,b}, u1): ");
  P(C3.result);
  std::printf(" converged=%d\n", (int)C3.converged);

  // recurrence dichotomy
  t0 = now();
  auto bb = make_closed_set(sys, {Point{b}, Point{complement_point(b)}}, 0x1.0p-4);
  auto r1 = recurrence_report(bb, 0x1.0p-4, 1 << 16);
  std::printf("{b,bbar}: %s returns=%zu max-gap=%lld halves=%lld/%lld (%.2fs)\n",
              recurrence_verdict_name(r1.verdict), r1.return_times.size(),
              (long long)r1.max_gap, (long long)r1.first_half_max_gap,
              (long long)r1.second_half_max_gap, now() - t0);

  t0 = now();
  auto abSet = make_closed_set(sys, {Point{a}, Point{b}}, 0x1.0p-4);
  auto r2 = recurrence_report(abSet, 0x1.0p-4, 1 << 16);
  std::printf("{a,b}:    %s returns=%zu max-gap=%lld halves=%lld/%lld (%.2fs)\n",
              recurrence_verdict_name(r2.verdict), r2.return_times.size(),
              (long long)r2.max_gap, (long long)r2.first_half_max_gap,
              (long long)r2.second_half_max_gap, now() - t0);

  // d_star + quasifactor
  t0 = now();
  auto est_bb = d_star_estimate(bb, 1 << 16, 0x1.0p-4);
  std::printf("d_star({b,bbar}): %zu members (%.2fs)\n", est_bb.members.size(), now() - t0);
  t0 = now();
  auto q1 = quasifactor_check(est_bb.members, 0x1.0p-4, 1 << 16);
  std::printf("quasifactor({b,bbar}): minimal=%d (%.2fs)\n", (int)q1.minimal, now() - t0);

  t0 = now();
  auto est_ab = d_star_estimate(abSet, 1 << 16, 0x1.0p-4);
  std::printf("d_star({a,b}): %zu members (%.2fs)\n", est_ab.members.size(), now() - t0);
  t0 = now();
  auto q2 = quasifactor_check(est_ab.members, 0x1.0p-4, 1 << 16);
  std::printf("quasifactor({a,b}): minimal=%d witness=(%zu,%zu) (%.2fs)\n", (int)q2.minimal,
              q2.witness ? q2.witness->first : 0, q2.witness ? q2.witness->second : 0,
              now() - t0);

  // proximality rates
  for (int n = 1; n <= 5; ++n) {
    double d = point_distance(sys, shift_point(sys, Point{a}, n), shift_point(sys, Point{b}, n));
    std::printf("d(s^%d a, s^%d b) = %g (expect %g)\n", n, n, d, std::ldexp(1.0, -(n + 1)));
  }
  auto pr = proximal_pair(sys, Point{a}, Point{b}, 1 << 14);
  std::printf("pair(a,b): %s inf=%g\n", pair_verdict_name(pr.verdict), pr.inf_over_horizon);
  auto pr2 = proximal_pair(sys, Point{a}, Point{abar}, 10000);
  std::printf("pair(a,abar): %s inf=%g\n", pair_verdict_name(pr2.verdict), pr2.inf_over_horizon);

  // torus quick checks
  SystemSpec tor = torus_skew_system(golden_alpha());
  t0 = now();
  auto sr = search_identity_times(tor, 0.0, 1000000, 0.02);
  std::printf("search x=0 h=1e6: found=%d hits=%zu first=%lld (%.2fs)\n", (int)sr.found,
              sr.times.size(), (long long)(sr.times.empty() ? 0 : sr.times[0]), now() - t0);

  t0 = now();
  SplitMix64 rng(20260809);
  std::vector<TorusPoint> targets;
  for (int i = 0; i < 20; ++i)
    targets.push_back(make_torus_point(rng.next_unit(), rng.next_unit()));
  auto rep = verify_dt_density(tor, targets, 10000000, 0.02, 0.05);
  double worst = 0;
  for (auto& t : rep.targets) worst = std::max(worst, t.approach_distance);
  std::printf("dt-density 20 targets h=1e7: all=%d worst=%.4f (%.2fs)\n",
              (int)rep.all_within_threshold, worst, now() - t0);
  return 0;
}
