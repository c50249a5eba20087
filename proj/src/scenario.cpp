#include "hyperlab/scenario.hpp"

#include <chrono>
#include <cmath>
#include <set>
#include <sstream>
#include <stdexcept>

#include "hyperlab/hyperspace.hpp"
#include "hyperlab/idempotents.hpp"
#include "hyperlab/limits.hpp"
#include "hyperlab/torus.hpp"

namespace hyperlab {

namespace {

const std::set<std::string> kOperations = {
    "idempotent-algebra", "finite-set-images", "build-net",     "cluster-set",
    "recurrence-report",  "ap-set-test",       "proximal-pair", "prolongation-point",
    "d-star",             "quasifactor-check", "skew-power-check",
    "identity-time-search", "dt-density"};

void need(std::vector<std::string>& problems, bool ok, const std::string& msg) {
  if (!ok) problems.push_back(msg);
}

bool has_number(const Json& j, const char* key) {
  return j.contains(key) && j[key].is_number();
}

bool has_string(const Json& j, const char* key) {
  return j.contains(key) && j[key].is_string();
}

bool valid_point_json(const Json& j) {
  if (!j.is_object()) return false;
  if (j.contains("base")) return j["base"].is_string();
  if (j.contains("word")) return j["word"].is_string() && j.contains("lo");
  return has_number(j, "x") && has_number(j, "y");
}

bool valid_point_list(const Json& j) {
  if (!j.is_array() || j.empty()) return false;
  for (const auto& p : j)
    if (!valid_point_json(p)) return false;
  return true;
}

}  // namespace

SystemSpec system_from_json(const Json& j) {
  if (!j.is_object() || !has_string(j, "kind"))
    throw std::invalid_argument("system needs a string 'kind'");
  const std::string kind = j["kind"];
  if (kind == "morse-square") return morse_square_system();
  if (kind == "torus-skew") {
    if (j.contains("alpha") && j["alpha"].is_number())
      return torus_skew_system(j["alpha"].get<double>());
    if (!j.contains("alpha") ||
        (j["alpha"].is_string() && j["alpha"] == "golden"))
      return torus_skew_system(golden_alpha());
    throw std::invalid_argument("torus alpha must be a number or \"golden\"");
  }
  throw std::invalid_argument("unknown system kind: " + kind);
}

Json point_to_json(const Point& p) {
  Json j;
  if (is_symbolic(p)) {
    const auto& sp = std::get<SymbolicPoint>(p);
    if (sp.seed_form()) {
      j["base"] = tag_name(*sp.base);
      j["shift"] = sp.shift;
    } else {
      j["word"] = sp.letters;
      j["lo"] = sp.lo;
    }
  } else {
    const auto& tp = std::get<TorusPoint>(p);
    j["x"] = tp.x;
    j["y"] = tp.y;
  }
  return j;
}

Point point_from_json(const SystemSpec& sys, const Json& j) {
  if (!j.is_object()) throw std::invalid_argument("point must be an object");
  if (sys.kind == SystemKind::SubstitutionSubshift) {
    const bool comp = j.value("complement", false);
    if (j.contains("base"))
      return make_seed_point(tag_from_name(j["base"].get<std::string>()),
                             j.value("shift", std::int64_t{0}), comp);
    if (j.contains("word"))
      return make_window_point(j["word"].get<std::string>(),
                               j["lo"].get<std::int64_t>(), comp);
    throw std::invalid_argument("symbolic point needs 'base' or 'word'");
  }
  if (!has_number(j, "x") || !has_number(j, "y"))
    throw std::invalid_argument("torus point needs numeric 'x' and 'y'");
  return make_torus_point(j["x"].get<double>(), j["y"].get<double>());
}

namespace {

std::vector<Point> points_from_json(const SystemSpec& sys, const Json& arr) {
  std::vector<Point> pts;
  for (const auto& p : arr) pts.push_back(point_from_json(sys, p));
  return pts;
}

Json points_to_json(const std::vector<Point>& pts) {
  Json arr = Json::array();
  for (const auto& p : pts) arr.push_back(point_to_json(p));
  return arr;
}

TimeNet net_from_json(const SystemSpec& sys, const Json& j) {
  const std::string type = j.at("type").get<std::string>();
  if (type == "idempotent") {
    std::vector<std::int64_t> radii =
        j.value("radii", std::vector<std::int64_t>(kDefaultNetRadii));
    const std::int64_t horizon = j.value("horizon", kDefaultNetHorizon);
    return timenet_for_idempotent(sys, table_from_name(j.at("table")), radii,
                                  horizon);
  }
  if (type == "constant") return constant_net(sys, j.at("t").get<std::int64_t>());
  if (type == "identity") {
    std::vector<TorusPoint> probe;
    for (const auto& p : j.at("probe"))
      probe.push_back(std::get<TorusPoint>(point_from_json(sys, p)));
    return identity_timenet(sys, probe, j.at("horizon").get<std::int64_t>(),
                            j.value("max_times", 24));
  }
  if (type == "composed")
    return compose_nets(net_from_json(sys, j.at("outer")),
                        net_from_json(sys, j.at("inner")));
  throw std::invalid_argument("unknown net type: " + type);
}

Json net_to_json(const TimeNet& net) {
  Json j;
  j["label"] = net.label;
  j["times"] = net.times;
  if (!net.radii.empty()) j["radii"] = net.radii;
  if (!net.scores.empty()) j["scores"] = net.scores;
  if (!net.panel.empty()) {
    Json shifts = Json::array();
    for (const auto& p : net.panel) shifts.push_back(p.shift);
    j["panel_shifts"] = shifts;
  }
  j["truncated"] = net.truncated;
  if (!net.note.empty()) j["note"] = net.note;
  return j;
}

// ---- per-operation validation -------------------------------------------

void validate_params(const std::string& op, const Json& sc, const Json& p,
                     std::vector<std::string>& problems) {
  const bool torus = sc.contains("system") && sc["system"].is_object() &&
                     sc["system"].value("kind", "") == "torus-skew";
  if (op == "idempotent-algebra") return;
  if (op == "finite-set-images") {
    need(problems, p.contains("jobs") && p["jobs"].is_array() && !p["jobs"].empty(),
         "params.jobs: nonempty array required");
    if (p.contains("jobs") && p["jobs"].is_array())
      for (const auto& job : p["jobs"]) {
        need(problems, job.is_object() && has_string(job, "table"),
             "params.jobs[].table: string required");
        need(problems, job.is_object() && job.contains("set") && valid_point_list(job["set"]),
             "params.jobs[].set: nonempty point list required");
      }
    return;
  }
  if (op == "build-net") {
    if (torus) {
      need(problems, p.contains("probe") && valid_point_list(p["probe"]),
           "params.probe: nonempty point list required");
      need(problems, has_number(p, "horizon"), "params.horizon: number required");
    } else {
      need(problems, has_string(p, "table"), "params.table: string required");
      need(problems, p.contains("radii") && p["radii"].is_array(),
           "params.radii: array required");
      need(problems, has_number(p, "horizon"), "params.horizon: number required");
    }
    return;
  }
  if (op == "cluster-set") {
    need(problems, p.contains("net") && p["net"].is_object(),
         "params.net: object required");
    need(problems, p.contains("input") && valid_point_list(p["input"]),
         "params.input: nonempty point list required");
    need(problems, has_number(p, "eps"), "params.eps: number required");
    return;
  }
  if (op == "recurrence-report") {
    need(problems, p.contains("set") && valid_point_list(p["set"]),
         "params.set: nonempty point list required");
    need(problems, has_number(p, "eps"), "params.eps: number required");
    need(problems, has_number(p, "horizon"), "params.horizon: number required");
    return;
  }
  if (op == "ap-set-test") {
    need(problems, p.contains("tuple") && valid_point_list(p["tuple"]),
         "params.tuple: nonempty point list required");
    need(problems, has_number(p, "eps"), "params.eps: number required");
    need(problems, has_number(p, "horizon"), "params.horizon: number required");
    return;
  }
  if (op == "proximal-pair") {
    need(problems, p.contains("x") && valid_point_json(p["x"]),
         "params.x: point required");
    need(problems, p.contains("y") && valid_point_json(p["y"]),
         "params.y: point required");
    need(problems, has_number(p, "horizon"), "params.horizon: number required");
    return;
  }
  if (op == "prolongation-point") {
    need(problems, p.contains("x") && valid_point_json(p["x"]),
         "params.x: point required");
    need(problems, has_number(p, "delta"), "params.delta: number required");
    need(problems, has_number(p, "samples"), "params.samples: number required");
    need(problems, has_number(p, "horizon"), "params.horizon: number required");
    need(problems, has_number(p, "eps"), "params.eps: number required");
    return;
  }
  if (op == "d-star") {
    need(problems, p.contains("set") && valid_point_list(p["set"]),
         "params.set: nonempty point list required");
    need(problems, has_number(p, "eps"), "params.eps: number required");
    need(problems, has_number(p, "horizon"), "params.horizon: number required");
    return;
  }
  if (op == "quasifactor-check") {
    need(problems, p.contains("from_d_star") && p["from_d_star"].is_object(),
         "params.from_d_star: object required");
    if (p.contains("from_d_star") && p["from_d_star"].is_object()) {
      const auto& d = p["from_d_star"];
      need(problems, d.contains("set") && valid_point_list(d["set"]),
           "params.from_d_star.set: nonempty point list required");
      need(problems, has_number(d, "eps"), "params.from_d_star.eps: number required");
      need(problems, has_number(d, "horizon"),
           "params.from_d_star.horizon: number required");
    }
    need(problems, has_number(p, "eps"), "params.eps: number required");
    need(problems, has_number(p, "horizon"), "params.horizon: number required");
    return;
  }
  if (op == "skew-power-check") {
    need(problems, has_number(p, "count"), "params.count: number required");
    need(problems, has_number(p, "max_n"), "params.max_n: number required");
    need(problems, has_number(p, "tol"), "params.tol: number required");
    return;
  }
  if (op == "identity-time-search") {
    need(problems, has_number(p, "x"), "params.x: number required");
    need(problems, has_number(p, "horizon"), "params.horizon: number required");
    need(problems, has_number(p, "tol"), "params.tol: number required");
    return;
  }
  if (op == "dt-density") {
    need(problems,
         has_number(p, "targets") ||
             (p.contains("targets") && valid_point_list(p["targets"])),
         "params.targets: count or point list required");
    need(problems, has_number(p, "horizon"), "params.horizon: number required");
    need(problems, has_number(p, "search_tol"), "params.search_tol: number required");
    need(problems, has_number(p, "report_threshold"),
         "params.report_threshold: number required");
    return;
  }
}

}  // namespace

ValidationResult validate_scenario(const Json& sc) {
  ValidationResult res;
  if (!sc.is_object()) {
    res.problems.push_back("scenario must be a JSON object");
    return res;
  }
  need(res.problems, has_string(sc, "name"), "name: string required");
  need(res.problems, sc.contains("system") && sc["system"].is_object(),
       "system: object required");
  if (sc.contains("system") && sc["system"].is_object()) {
    try {
      system_from_json(sc["system"]);
    } catch (const std::exception& e) {
      res.problems.push_back(std::string("system: ") + e.what());
    }
  }
  need(res.problems, has_string(sc, "operation"), "operation: string required");
  if (has_string(sc, "operation")) {
    const std::string op = sc["operation"];
    if (!kOperations.count(op))
      res.problems.push_back("operation: unknown operation '" + op + "'");
    else {
      need(res.problems, sc.contains("params") && sc["params"].is_object(),
           "params: object required");
      if (sc.contains("params") && sc["params"].is_object())
        validate_params(op, sc, sc["params"], res.problems);
    }
  }
  if (sc.contains("rng_seed"))
    need(res.problems, sc["rng_seed"].is_number_integer(),
         "rng_seed: integer required");
  res.ok = res.problems.empty();
  return res;
}

ValidationResult validate_scenario_document(const Json& doc) {
  ValidationResult res;
  if (doc.is_object()) return validate_scenario(doc);
  if (!doc.is_array()) {
    res.problems.push_back("config must be a scenario object or array of them");
    return res;
  }
  if (doc.empty()) {
    res.problems.push_back("scenario array must be nonempty");
    return res;
  }
  for (std::size_t i = 0; i < doc.size(); ++i) {
    auto sub = validate_scenario(doc[i]);
    for (auto& p : sub.problems)
      res.problems.push_back("[" + std::to_string(i) + "] " + p);
  }
  res.ok = res.problems.empty();
  return res;
}

namespace {

Json closed_set_to_json(const FiniteClosedSet& s) {
  Json j;
  j["resolution"] = s.resolution;
  j["points"] = points_to_json(s.points);
  return j;
}

Json run_idempotent_algebra(const SystemSpec& sys) {
  Json out;
  const auto tables = shipped_tables();
  Json comps = Json::array();
  for (const auto& s : tables)
    for (const auto& t : tables) {
      const auto c = compose_tables(s, t);
      Json e;
      e["left"] = s.name;
      e["right"] = t.name;
      Json action = Json::array();
      for (BaseTag b : kAllBases) action.push_back(tag_name(c.act(b)));
      e["action"] = action;
      // Which shipped table (if any) the composite acts as.
      e["acts_as"] = "";
      for (const auto& w : tables)
        if (c.same_action(w)) e["acts_as"] = w.name;
      comps.push_back(e);
    }
  out["compositions"] = comps;

  Json orders;
  const auto add_order = [&](const IdempotentTable& s, const IdempotentTable& t) {
    orders[s.name + "," + t.name] = quasi_order_name(quasi_order_check(s, t));
  };
  add_order(table_u1(), table_v1());
  add_order(table_u2(), table_v2());
  add_order(table_u1(), table_u2());
  add_order(table_v1(), table_v2());
  add_order(table_u1(), table_u1());
  out["quasi_orders"] = orders;

  Json fixed;
  for (const auto& t : tables) {
    Json row;
    for (BaseTag b : kAllBases)
      row[tag_name(b)] = in_fixed_set(sys, t, make_seed_point(b));
    fixed[t.name] = row;
  }
  out["fixed_sets"] = fixed;

  Json verdicts;
  const auto acts_as = [&](const IdempotentTable& c, const IdempotentTable& w) {
    return c.same_action(w);
  };
  verdicts["u1v1_is_v1"] = acts_as(compose_tables(table_u1(), table_v1()), table_v1());
  verdicts["v1u1_is_u1"] = acts_as(compose_tables(table_v1(), table_u1()), table_u1());
  verdicts["u2v2_is_v2"] = acts_as(compose_tables(table_u2(), table_v2()), table_v2());
  verdicts["v2u2_is_u2"] = acts_as(compose_tables(table_v2(), table_u2()), table_u2());
  verdicts["u1_equiv_v1"] =
      quasi_order_check(table_u1(), table_v1()) == QuasiOrder::Equivalent;
  verdicts["u2_equiv_v2"] =
      quasi_order_check(table_u2(), table_v2()) == QuasiOrder::Equivalent;
  verdicts["u1_u2_incomparable"] =
      quasi_order_check(table_u1(), table_u2()) == QuasiOrder::Incomparable;
  bool fu = true;
  for (const auto& t : {table_u1(), table_v1()}) {
    fu = fu && !in_fixed_set(sys, t, make_seed_point(BaseTag::A));
    fu = fu && !in_fixed_set(sys, t, make_seed_point(BaseTag::ABar));
    fu = fu && in_fixed_set(sys, t, make_seed_point(BaseTag::B));
    fu = fu && in_fixed_set(sys, t, make_seed_point(BaseTag::BBar));
  }
  for (const auto& t : {table_u2(), table_v2()}) {
    fu = fu && in_fixed_set(sys, t, make_seed_point(BaseTag::A));
    fu = fu && in_fixed_set(sys, t, make_seed_point(BaseTag::ABar));
    fu = fu && !in_fixed_set(sys, t, make_seed_point(BaseTag::B));
    fu = fu && !in_fixed_set(sys, t, make_seed_point(BaseTag::BBar));
  }
  verdicts["fixed_set_membership"] = fu;
  Json rec;
  rec["outputs"] = out;
  rec["verdicts"] = verdicts;
  return rec;
}

Json recurrence_to_json(const RecurrenceReport& r) {
  Json out;
  out["eps"] = r.eps;
  out["horizon"] = r.horizon;
  out["return_count"] = r.return_times.size();
  out["return_times"] = r.return_times;
  out["return_dists"] = r.return_dists;
  out["gaps"] = r.gaps;
  out["max_gap"] = r.max_gap;
  out["first_half_max_gap"] = r.first_half_max_gap;
  out["second_half_max_gap"] = r.second_half_max_gap;
  return out;
}

Json cluster_to_json(const ClusterSet& c) {
  Json out;
  out["net"] = net_to_json(c.net);
  out["eps"] = c.eps;
  out["result"] = closed_set_to_json(c.result);
  out["witness"] = c.witness;
  out["times_used"] = c.times_used;
  if (!c.note.empty()) out["note"] = c.note;
  return out;
}

}  // namespace

Json run_scenario_json(const Json& sc) {
  const auto val = validate_scenario(sc);
  if (!val.ok) {
    std::string msg = "invalid scenario";
    for (const auto& p : val.problems) msg += "; " + p;
    throw std::invalid_argument(msg);
  }
  const auto t0 = std::chrono::steady_clock::now();

  const SystemSpec sys = system_from_json(sc["system"]);
  const std::string op = sc["operation"];
  const Json& p = sc["params"];
  const std::uint64_t seed = sc.value("rng_seed", std::uint64_t{0});

  Json record;
  record["scenario"] = sc;
  Json outputs;
  Json verdicts;
  Json budget;
  budget["mod1_step"] = kModStepBudget;
  budget["comparison_radius"] = kComparisonRadius;
  budget["orbit_membership_horizon"] = kOrbitMembershipHorizon;

  if (op == "idempotent-algebra") {
    Json rec = run_idempotent_algebra(sys);
    outputs = rec["outputs"];
    verdicts = rec["verdicts"];
  } else if (op == "finite-set-images") {
    Json jobs = Json::array();
    for (const auto& job : p["jobs"]) {
      const auto table = table_from_name(job["table"]);
      const auto set = make_closed_set(sys, points_from_json(sys, job["set"]),
                                       job.value("resolution", 0x1.0p-6));
      const auto image = apply_to_finite_set(table, set);
      Json e;
      e["table"] = table.name;
      e["input"] = points_to_json(set.points);
      e["image"] = points_to_json(image.points);
      jobs.push_back(e);
    }
    outputs["jobs"] = jobs;
    verdicts["computed"] = true;
  } else if (op == "build-net") {
    TimeNet net;
    if (sys.kind == SystemKind::SubstitutionSubshift) {
      net = timenet_for_idempotent(sys, table_from_name(p["table"]),
                                   p["radii"].get<std::vector<std::int64_t>>(),
                                   p["horizon"].get<std::int64_t>());
    } else {
      std::vector<TorusPoint> probe;
      for (const auto& q : p["probe"])
        probe.push_back(std::get<TorusPoint>(point_from_json(sys, q)));
      net = identity_timenet(sys, probe, p["horizon"].get<std::int64_t>(),
                             p.value("max_times", 24));
    }
    outputs["net"] = net_to_json(net);
    verdicts["nonempty"] = !net.times.empty();
    verdicts["truncated"] = net.truncated;
  } else if (op == "cluster-set") {
    const auto net = net_from_json(sys, p["net"]);
    const double eps = p["eps"];
    const auto A = make_closed_set(sys, points_from_json(sys, p["input"]), eps);
    const auto c = cluster_set(A, net, eps);
    outputs = cluster_to_json(c);
    verdicts["converged"] = c.converged;
  } else if (op == "recurrence-report") {
    const double eps = p["eps"];
    const auto A = make_closed_set(sys, points_from_json(sys, p["set"]), eps);
    const auto r = recurrence_report(A, eps, p["horizon"].get<std::int64_t>());
    outputs = recurrence_to_json(r);
    verdicts["verdict"] = recurrence_verdict_name(r.verdict);
  } else if (op == "ap-set-test") {
    const auto tuple = points_from_json(sys, p["tuple"]);
    const auto r = ap_set_test(sys, tuple, p["eps"].get<double>(),
                               p["horizon"].get<std::int64_t>());
    outputs = recurrence_to_json(r);
    verdicts["verdict"] = recurrence_verdict_name(r.verdict);
  } else if (op == "proximal-pair") {
    const auto r = proximal_pair(sys, point_from_json(sys, p["x"]),
                                 point_from_json(sys, p["y"]),
                                 p["horizon"].get<std::int64_t>(),
                                 p.value("threshold", 0.0));
    outputs["inf_over_horizon"] = r.inf_over_horizon;
    outputs["liminf_estimate"] = r.liminf_estimate;
    outputs["argmin_n"] = r.argmin_n;
    outputs["threshold"] = r.threshold;
    outputs["horizon"] = r.horizon;
    verdicts["verdict"] = pair_verdict_name(r.verdict);
  } else if (op == "prolongation-point") {
    const auto est = prolongation_point(
        sys, point_from_json(sys, p["x"]), p["delta"].get<double>(),
        p["samples"].get<int>(), p["horizon"].get<std::int64_t>(),
        p["eps"].get<double>());
    outputs["estimate_size"] = est.points.size();
    outputs["estimate"] = closed_set_to_json(est);
    verdicts["computed"] = true;
  } else if (op == "d-star") {
    const double eps = p["eps"];
    const auto A = make_closed_set(sys, points_from_json(sys, p["set"]), eps);
    const auto est = d_star_estimate(A, p["horizon"].get<std::int64_t>(), eps);
    outputs["member_count"] = est.members.size();
    outputs["member_times"] = est.times;
    Json members = Json::array();
    for (const auto& m : est.members) members.push_back(points_to_json(m.points));
    outputs["members"] = members;
    if (p.value("crosscheck", false)) {
      const auto cc = d_star_crosscheck(A, est, eps,
                                        p.value("net_horizon", kDefaultNetHorizon));
      Json c;
      c["labels"] = cc.labels;
      c["nearest_member"] = cc.nearest_member;
      c["distance"] = cc.distance;
      c["all_covered"] = cc.all_covered;
      outputs["crosscheck"] = c;
      verdicts["catalog_covered"] = cc.all_covered;
    }
    verdicts["computed"] = true;
  } else if (op == "quasifactor-check") {
    const auto& d = p["from_d_star"];
    const double deps = d["eps"];
    const auto A = make_closed_set(sys, points_from_json(sys, d["set"]), deps);
    const auto est = d_star_estimate(A, d["horizon"].get<std::int64_t>(), deps);
    const auto q = quasifactor_check(est.members, p["eps"].get<double>(),
                                     p["horizon"].get<std::int64_t>());
    outputs["collection_size"] = est.members.size();
    outputs["member_times"] = est.times;
    if (q.witness) {
      outputs["witness_member"] = q.witness->first;
      outputs["witness_target"] = q.witness->second;
    }
    verdicts["verdict"] = q.minimal ? "minimal-at-resolution" : "not-minimal";
  } else if (op == "skew-power-check") {
    const int count = p["count"].get<int>();
    const std::int64_t max_n = p["max_n"].get<std::int64_t>();
    const double tol = p["tol"];
    SplitMix64 rng(seed ? seed : 1);
    double worst = 0.0;
    for (int i = 0; i < count; ++i) {
      TorusPoint q = make_torus_point(rng.next_unit(), rng.next_unit());
      TorusPoint iter = q;
      const std::int64_t n = 1 + static_cast<std::int64_t>(rng.next() %
                                 static_cast<std::uint64_t>(max_n));
      for (std::int64_t k = 0; k < n; ++k) iter = skew_step(sys, iter);
      const TorusPoint closed = skew_power(sys, n, q);
      worst = std::max(worst, std::max(circle_distance(iter.x, closed.x),
                                       circle_distance(iter.y, closed.y)));
    }
    outputs["count"] = count;
    outputs["max_n"] = max_n;
    outputs["worst_deviation"] = worst;
    outputs["tol"] = tol;
    verdicts["within_tol"] = worst <= tol;
  } else if (op == "identity-time-search") {
    const auto r = search_identity_times(sys, p["x"].get<double>(),
                                         p["horizon"].get<std::int64_t>(),
                                         p["tol"].get<double>());
    outputs["hit_count"] = r.times.size();
    outputs["times"] = r.times;
    outputs["scores"] = r.scores;
    outputs["improving"] = r.improving;
    outputs["best_n"] = r.best_n;
    outputs["best_score"] = r.best_score;
    outputs["tolerance"] = r.tolerance;
    outputs["horizon"] = r.horizon;
    budget["score_budget"] = r.error_budget;
    verdicts["found"] = r.found;
  } else if (op == "dt-density") {
    std::vector<TorusPoint> targets;
    if (p["targets"].is_number()) {
      SplitMix64 rng(seed ? seed : 1);
      const int n = p["targets"].get<int>();
      for (int i = 0; i < n; ++i)
        targets.push_back(make_torus_point(rng.next_unit(), rng.next_unit()));
    } else {
      for (const auto& t : p["targets"])
        targets.push_back(std::get<TorusPoint>(point_from_json(sys, t)));
    }
    const auto rep = verify_dt_density(sys, targets,
                                       p["horizon"].get<std::int64_t>(),
                                       p["search_tol"].get<double>(),
                                       p["report_threshold"].get<double>());
    Json rows = Json::array();
    double worst = 0.0;
    bool any_not_found = false;
    for (const auto& t : rep.targets) {
      Json e;
      e["x"] = t.x;
      e["y"] = t.y;
      e["found"] = t.found;
      e["best_n"] = t.best_n;
      e["best_score"] = t.best_score;
      e["approach_distance"] = t.approach_distance;
      rows.push_back(e);
      if (t.found) worst = std::max(worst, t.approach_distance);
      any_not_found = any_not_found || !t.found;
    }
    outputs["targets"] = rows;
    outputs["worst_approach"] = worst;
    outputs["search_tol"] = rep.search_tol;
    outputs["report_threshold"] = rep.report_threshold;
    outputs["horizon"] = rep.horizon;
    budget["approach_budget"] = rep.error_budget;
    verdicts["all_within_threshold"] = rep.all_within_threshold;
    verdicts["all_found"] = !any_not_found;
  }

  record["outputs"] = outputs;
  record["verdicts"] = verdicts;
  record["error_budget"] = budget;
  const auto t1 = std::chrono::steady_clock::now();
  Json timing;
  timing["elapsed_seconds"] =
      std::chrono::duration<double>(t1 - t0).count();
  record["timing"] = timing;
  return record;
}

std::vector<Json> run_scenario_document(const Json& doc) {
  std::vector<Json> records;
  if (doc.is_object()) {
    records.push_back(run_scenario_json(doc));
    return records;
  }
  const auto val = validate_scenario_document(doc);
  if (!val.ok) {
    std::string msg = "invalid scenario document";
    for (const auto& p : val.problems) msg += "; " + p;
    throw std::invalid_argument(msg);
  }
  for (const auto& sc : doc) records.push_back(run_scenario_json(sc));
  return records;
}

std::string emit_machine(const Json& record) {
  std::string out;
  for (const auto& section : {"scenario", "outputs", "verdicts", "error_budget"}) {
    if (!record.contains(section)) continue;
    Json line;
    line["section"] = section;
    line["data"] = record[section];
    out += line.dump();
    out += '\n';
  }
  return out;
}

std::string emit_table_text(const Json& record) {
  std::ostringstream os;
  const auto& sc = record["scenario"];
  os << "scenario: " << sc.value("name", "?") << "\n";
  os << "operation: " << sc.value("operation", "?") << "\n";
  if (record.contains("verdicts"))
    for (const auto& [k, v] : record["verdicts"].items())
      os << "  verdict " << k << " = " << v.dump() << "\n";
  if (record.contains("outputs")) {
    const auto& o = record["outputs"];
    for (const auto& key : {"return_count", "max_gap", "first_half_max_gap",
                            "second_half_max_gap", "member_count", "hit_count",
                            "worst_approach", "estimate_size", "witness",
                            "times_used", "worst_deviation", "best_n"}) {
      if (o.contains(key)) os << "  " << key << " = " << o[key].dump() << "\n";
    }
  }
  if (record.contains("timing"))
    os << "  elapsed = " << record["timing"]["elapsed_seconds"].dump() << " s\n";
  return os.str();
}

std::vector<std::pair<std::string, std::string>> emit_csv(const Json& record) {
  std::vector<std::pair<std::string, std::string>> files;
  const std::string op = record["scenario"].value("operation", "");
  const auto& o = record["outputs"];

  if (op == "recurrence-report" || op == "ap-set-test") {
    std::ostringstream os;
    os << "n,d_H,gap\n";
    const auto& times = o["return_times"];
    const auto& dists = o["return_dists"];
    std::int64_t prev = 0;
    for (std::size_t i = 0; i < times.size(); ++i) {
      const std::int64_t n = times[i].get<std::int64_t>();
      os << n << "," << dists[i].dump() << "," << (n - prev) << "\n";
      prev = n;
    }
    files.emplace_back("gaps.csv", os.str());
  } else if (op == "cluster-set") {
    std::ostringstream os;
    os << "point\n";
    for (const auto& pt : o["result"]["points"]) os << pt.dump() << "\n";
    files.emplace_back("points.csv", os.str());
    std::ostringstream ws;
    ws << "witness,times_used,converged\n";
    ws << o["witness"].dump() << "," << o["times_used"].dump() << ","
       << record["verdicts"]["converged"].dump() << "\n";
    files.emplace_back("witness.csv", ws.str());
  } else if (op == "identity-time-search") {
    std::ostringstream os;
    os << "n,score\n";
    const auto& times = o["times"];
    const auto& scores = o["scores"];
    for (std::size_t i = 0; i < times.size(); ++i)
      os << times[i].dump() << "," << scores[i].dump() << "\n";
    files.emplace_back("hits.csv", os.str());
  } else if (op == "dt-density") {
    std::ostringstream os;
    os << "x,y,found,best_n,best_score,approach_distance\n";
    for (const auto& t : o["targets"])
      os << t["x"].dump() << "," << t["y"].dump() << "," << t["found"].dump()
         << "," << t["best_n"].dump() << "," << t["best_score"].dump() << ","
         << t["approach_distance"].dump() << "\n";
    files.emplace_back("targets.csv", os.str());
  }
  return files;
}

}  // namespace hyperlab
