#include "hyperlab/limits.hpp"

#include <algorithm>
#include <cmath>
#include <cstdlib>
#include <map>
#include <set>
#include <sstream>
#include <unordered_map>
#include <unordered_set>

#include "hyperlab/torus.hpp"

namespace hyperlab {

namespace {

void require_subshift(const SystemSpec& sys) {
  if (sys.kind != SystemKind::SubstitutionSubshift)
    throw std::invalid_argument("operation needs the substitution subshift");
}

// Smallest r >= 0 with 2^-r <= eps. Dyadic distances d satisfy d <= eps
// iff d <= 2^-r, so agreement to radius r decides eps-closeness exactly.
std::int64_t dyadic_depth(double eps) {
  if (eps <= 0.0) throw std::invalid_argument("eps must be positive");
  std::int64_t r = 0;
  while (r < 64 && std::ldexp(1.0, static_cast<int>(-r)) > eps) ++r;
  return r;
}

// Central window of a symbolic point as a key string, or nullopt when the
// point does not know all of [-r, r).
std::optional<std::string> window_key(const Substitution& s,
                                      const SymbolicPoint& p, std::int64_t r) {
  std::string key;
  key.reserve(static_cast<std::size_t>(2 * r));
  for (std::int64_t i = -r; i < r; ++i) {
    auto l = letter_at(s, p, i);
    if (!l) return std::nullopt;
    key += static_cast<char>('0' + *l);
  }
  return key;
}

// Key-set signature of a symbolic point list at radius r: d_H between two
// lists is <= 2^-r exactly when their signatures coincide.
std::optional<std::string> set_signature(const Substitution& s,
                                         const std::vector<Point>& pts,
                                         std::int64_t r) {
  std::set<std::string> keys;
  for (const auto& p : pts) {
    auto k = window_key(s, std::get<SymbolicPoint>(p), r);
    if (!k) return std::nullopt;
    keys.insert(*k);
  }
  std::string sig;
  for (const auto& k : keys) {
    sig += k;
    sig += '|';
  }
  return sig;
}

double hausdorff_points(const SystemSpec& sys, const std::vector<Point>& A,
                        const std::vector<Point>& B) {
  double h = 0.0;
  for (int dir = 0; dir < 2; ++dir) {
    const auto& from = dir == 0 ? A : B;
    const auto& to = dir == 0 ? B : A;
    for (const auto& p : from) {
      double nearest = 2.0;
      for (const auto& q : to)
        nearest = std::min(nearest, point_distance(sys, p, q));
      h = std::max(h, nearest);
    }
  }
  return h;
}

bool point_within(const SystemSpec& sys, const Point& x, const Point& y,
                  double eps, std::int64_t depth) {
  if (sys.kind == SystemKind::TorusSkew)
    return point_distance(sys, x, y) <= eps;
  return symbolic_within(sys.subst, std::get<SymbolicPoint>(x),
                         std::get<SymbolicPoint>(y), depth);
}

bool hausdorff_within_points(const SystemSpec& sys, const std::vector<Point>& A,
                             const std::vector<Point>& B, double eps,
                             std::int64_t depth) {
  for (int dir = 0; dir < 2; ++dir) {
    const auto& from = dir == 0 ? A : B;
    const auto& to = dir == 0 ? B : A;
    for (const auto& p : from) {
      bool covered = false;
      for (const auto& q : to) {
        if (point_within(sys, p, q, eps, depth)) {
          covered = true;
          break;
        }
      }
      if (!covered) return false;
    }
  }
  return true;
}

}  // namespace

std::vector<SymbolicPoint> morse_net_panel() {
  SplitMix64 rng(kPanelSeed);
  std::vector<SymbolicPoint> panel;
  std::set<std::int64_t> used;
  while (panel.size() < 8) {
    const std::int64_t shift =
        rng.next_in(kOrbitMembershipHorizon + 1, 4 * kOrbitMembershipHorizon);
    if (!used.insert(shift).second) continue;
    panel.push_back(make_seed_point(BaseTag::A, shift));
  }
  return panel;
}

TimeNet timenet_for_idempotent(const SystemSpec& sys, const IdempotentTable& table,
                               const std::vector<std::int64_t>& radii,
                               std::int64_t horizon) {
  require_subshift(sys);
  for (std::size_t i = 0; i < radii.size(); ++i) {
    if (radii[i] < 1 || (i > 0 && radii[i] <= radii[i - 1]))
      throw std::invalid_argument("net radii must be positive and strictly increasing");
  }
  if (horizon < 1) throw std::invalid_argument("net horizon must be >= 1");

  TimeNet net;
  net.kind = TimeNet::Kind::IdempotentApprox;
  net.system = SystemKind::SubstitutionSubshift;
  net.label = table.name + "-net";
  net.table = table;
  net.panel = morse_net_panel();
  net.requested_radii = radii;
  if (radii.empty()) return net;

  const Substitution& S = sys.subst;
  const std::int64_t cap = radii.back();

  // Joint agreement depth at time n: the largest W <= cap such that every
  // base agrees with its table image and every panel point returns, on the
  // window of radius W. The panel shifts take the sign of the candidate
  // time: orbit points far out in the direction the times come from are the
  // ones that look like fixed points of the table at window resolution
  // (sigma^K a and sigma^K b share the window of radius K for K > 0, and
  // the mirrored pair does for K < 0), so they are the legitimate stand-ins
  // for "identity off the orbits" on that side.
  const auto depth_at = [&](std::int64_t n) {
    std::int64_t d = cap;
    for (BaseTag b : kAllBases) {
      const BaseTag target = table.act(b);
      std::int64_t r = 0;
      while (r < d && base_letter(S, b, n + r) == base_letter(S, target, r) &&
             base_letter(S, b, n - r - 1) == base_letter(S, target, -r - 1))
        ++r;
      d = std::min(d, r);
      if (d == 0) return d;
    }
    const std::int64_t sgn = n < 0 ? -1 : 1;
    for (const auto& p : net.panel) {
      const std::int64_t k = sgn * std::llabs(p.shift);
      std::int64_t r = 0;
      while (r < d &&
             base_letter(S, BaseTag::A, k + n + r) == base_letter(S, BaseTag::A, k + r) &&
             base_letter(S, BaseTag::A, k + n - r - 1) == base_letter(S, BaseTag::A, k - r - 1))
        ++r;
      d = std::min(d, r);
      if (d == 0) return d;
    }
    return d;
  };

  // Times are searched over both signs of the group: the u-type tables are
  // reproduced along forward shifts, the v-type tables only along backward
  // ones (forward shifts carry a and b together, so no positive time can
  // separate their images). The first hit locks the direction so that one
  // net never mixes the two asymptotic regimes.
  std::size_t idx = 0;
  std::int64_t best_depth = -1, best_n = 0;
  int sign_lock = 0;
  for (std::int64_t mag = 1; mag <= horizon && idx < radii.size(); ++mag) {
    for (int sgn : {+1, -1}) {
      if (sign_lock != 0 && sgn != sign_lock) continue;
      const std::int64_t n = sgn * mag;
      const std::int64_t d = depth_at(n);
      if (d > best_depth) {
        best_depth = d;
        best_n = n;
      }
      bool recorded = false;
      while (idx < radii.size() && d >= radii[idx]) {
        if (!net.times.empty() && net.times.back() == n)
          net.radii.back() = radii[idx];
        else {
          net.times.push_back(n);
          net.radii.push_back(radii[idx]);
        }
        ++idx;
        recorded = true;
      }
      if (recorded) sign_lock = sgn;
      if (idx >= radii.size()) break;
    }
  }
  if (net.times.empty()) {
    std::ostringstream os;
    os << "no time up to " << horizon << " reproduces " << table.name
       << " at radius " << radii.front() << " (best depth " << best_depth
       << " at n = " << best_n << ")";
    throw EmptyNetError(os.str(), best_n, best_depth);
  }
  if (sign_lock < 0)
    for (auto& p : net.panel) p.shift = -std::llabs(p.shift);
  if (idx < radii.size()) {
    net.truncated = true;
    std::ostringstream os;
    os << "truncated: radius " << radii[idx] << " not reached by horizon "
       << horizon;
    net.note = os.str();
  }
  return net;
}

TimeNet constant_net(const SystemSpec& sys, std::int64_t t) {
  TimeNet net;
  net.kind = TimeNet::Kind::Raw;
  net.system = sys.kind;
  net.label = "const" + std::to_string(t);
  net.times = {t};
  return net;
}

TimeNet identity_timenet(const SystemSpec& sys, const std::vector<TorusPoint>& probe,
                         std::int64_t horizon, int max_times) {
  if (sys.kind != SystemKind::TorusSkew)
    throw std::invalid_argument("identity nets are built for the torus system");
  if (probe.empty())
    throw std::invalid_argument("identity nets need a nonempty probe panel");
  if (horizon < 2) throw std::invalid_argument("horizon must be >= 2");

  TimeNet net;
  net.kind = TimeNet::Kind::IdentityApprox;
  net.system = SystemKind::TorusSkew;
  net.label = "id-net";
  net.probe = probe;

  double best = 2.0;
  for (std::int64_t n = 2; n <= horizon; ++n) {
    double score = 0.0;
    for (const auto& p : probe) {
      const TorusPoint q = skew_power(sys, n, p);
      score = std::max(score, std::max(circle_distance(q.x, p.x),
                                       circle_distance(q.y, p.y)));
      if (score >= best) break;
    }
    if (score < best) {
      best = score;
      net.times.push_back(n);
      net.scores.push_back(score);
    }
  }
  if (static_cast<int>(net.times.size()) > max_times) {
    const std::size_t drop = net.times.size() - static_cast<std::size_t>(max_times);
    net.times.erase(net.times.begin(), net.times.begin() + drop);
    net.scores.erase(net.scores.begin(), net.scores.begin() + drop);
  }
  return net;
}

TimeNet compose_nets(const TimeNet& p, const TimeNet& q) {
  if (p.times.empty() || q.times.empty())
    throw std::invalid_argument("compose_nets needs nonempty nets");
  if (p.system != q.system)
    throw std::invalid_argument("compose_nets needs nets over one system");

  TimeNet net;
  net.system = p.system;
  net.label = p.label + "*" + q.label;
  const std::size_t m = std::min(p.times.size(), q.times.size());
  for (std::size_t i = 0; i < m; ++i)
    net.times.push_back(p.times[i] + q.times[i]);

  if (p.kind == TimeNet::Kind::IdempotentApprox &&
      q.kind == TimeNet::Kind::IdempotentApprox) {
    net.kind = TimeNet::Kind::IdempotentApprox;
    // The inner approximation must outlast the outer time: shifting by
    // p.times[i] costs |p.times[i]| of q's certified radius.
    for (std::size_t i = 0; i < m; ++i)
      net.radii.push_back(
          std::min<std::int64_t>(p.radii[i], q.radii[i] - std::llabs(p.times[i])));
    if (p.table && q.table) net.table = compose_tables(*p.table, *q.table);
    net.panel = p.panel;
    net.note = "levelwise composition";
  } else {
    net.kind = TimeNet::Kind::Raw;
    net.note = "levelwise composition (uncertified)";
  }
  return net;
}

ClusterSet cluster_set(const FiniteClosedSet& A, const TimeNet& net, double eps) {
  if (net.times.empty())
    throw std::invalid_argument("cluster_set needs a nonempty net");
  if (!(eps > 0.0)) throw std::invalid_argument("eps must be positive");
  const bool sym = A.system.kind == SystemKind::SubstitutionSubshift;
  if ((net.system == SystemKind::SubstitutionSubshift) != sym)
    throw std::invalid_argument("net and set belong to different systems");

  ClusterSet out;
  out.input = A;
  out.net = net;
  out.eps = eps;

  // Certified subnet at this resolution.
  const std::int64_t r_eps = dyadic_depth(eps);
  std::vector<std::size_t> use;
  for (std::size_t i = 0; i < net.times.size(); ++i) {
    switch (net.kind) {
      case TimeNet::Kind::IdempotentApprox:
        if (net.radii[i] >= r_eps) use.push_back(i);
        break;
      case TimeNet::Kind::IdentityApprox:
        if (net.scores[i] <= eps / 2.0) use.push_back(i);
        break;
      case TimeNet::Kind::Raw:
        use.push_back(i);
        break;
    }
  }
  bool certified = true;
  if (use.empty()) {
    certified = false;
    out.note = "no net time certified at this resolution";
    for (std::size_t i = 0; i < net.times.size(); ++i) use.push_back(i);
  }
  out.times_used = static_cast<std::int64_t>(use.size());

  // Greedy pruning commutes with accumulation (it only looks at prefixes),
  // so the partial cluster sets can be maintained incrementally.
  std::vector<Point> prev_partial, partial;
  for (std::size_t k = 0; k < use.size(); ++k) {
    const std::size_t i = use[k];
    const std::int64_t n = net.times[i];
    prev_partial = partial;
    for (const auto& p : A.points) {
      Point q = shift_point(A.system, p, n);
      if (sym && net.kind == TimeNet::Kind::IdempotentApprox) {
        const auto& sp = std::get<SymbolicPoint>(p);
        if (sp.seed_form()) {
          const std::int64_t rid =
              std::min<std::int64_t>(128, net.radii[i] - std::llabs(sp.shift));
          if (rid >= 6) {
            auto m = identify_at_radius(A.system.subst,
                                        std::get<SymbolicPoint>(q), rid);
            if (m) q = make_seed_point(m->tag, m->shift);
          }
        }
      }
      bool blocked = false;
      for (const auto& r : partial) {
        if (point_distance(A.system, q, r) <= eps / 2.0) {
          blocked = true;
          break;
        }
      }
      if (!blocked) partial.push_back(std::move(q));
    }
  }

  out.witness = (use.size() >= 2)
                    ? hausdorff_points(A.system, prev_partial, partial)
                    : 0.0;
  out.converged = certified && out.witness <= eps;
  if (certified && !out.converged) out.note = "accumulation did not stabilize";
  out.result = make_closed_set(A.system, partial, eps);
  return out;
}

const char* recurrence_verdict_name(RecurrenceVerdict v) {
  return v == RecurrenceVerdict::SyndeticAtHorizon ? "syndetic-at-horizon"
                                                   : "gap-growth";
}

namespace {

void analyze_gaps(RecurrenceReport& rep) {
  const std::int64_t H = rep.horizon;
  std::int64_t prev = 0;
  auto place = [&](std::int64_t end, std::int64_t gap) {
    rep.gaps.push_back(gap);
    rep.max_gap = std::max(rep.max_gap, gap);
    if (end <= H / 2)
      rep.first_half_max_gap = std::max(rep.first_half_max_gap, gap);
    else
      rep.second_half_max_gap = std::max(rep.second_half_max_gap, gap);
  };
  for (std::int64_t r : rep.return_times) {
    place(r, r - prev);
    prev = r;
  }
  if (prev < H) place(H, H - prev);
  rep.verdict = (rep.second_half_max_gap <= 2 * rep.first_half_max_gap)
                    ? RecurrenceVerdict::SyndeticAtHorizon
                    : RecurrenceVerdict::GapGrowth;
}

}  // namespace

RecurrenceReport recurrence_report(const FiniteClosedSet& A, double eps,
                                   std::int64_t horizon) {
  if (horizon < 16) throw std::invalid_argument("recurrence horizon must be >= 16");
  if (!(eps > 0.0)) throw std::invalid_argument("eps must be positive");
  RecurrenceReport rep;
  rep.eps = eps;
  rep.horizon = horizon;
  const std::int64_t depth = dyadic_depth(eps);

  std::vector<Point> cur = A.points;
  for (std::int64_t n = 1; n <= horizon; ++n) {
    for (auto& p : cur) p = shift_point(A.system, p, 1);
    if (hausdorff_within_points(A.system, cur, A.points, eps, depth)) {
      rep.return_times.push_back(n);
      rep.return_dists.push_back(hausdorff_points(A.system, cur, A.points));
    }
  }
  analyze_gaps(rep);
  return rep;
}

RecurrenceReport ap_set_test(const SystemSpec& sys, const std::vector<Point>& tuple,
                             double eps, std::int64_t horizon) {
  if (tuple.empty()) throw std::invalid_argument("ap_set_test needs a nonempty tuple");
  if (horizon < 16) throw std::invalid_argument("horizon must be >= 16");
  for (const auto& p : tuple) require_in_system(sys, p);

  RecurrenceReport rep;
  rep.eps = eps;
  rep.horizon = horizon;
  const std::int64_t depth = dyadic_depth(eps);

  std::vector<Point> cur = tuple;
  for (std::int64_t n = 1; n <= horizon; ++n) {
    for (auto& p : cur) p = shift_point(sys, p, 1);
    bool inside = true;
    for (std::size_t j = 0; j < tuple.size() && inside; ++j)
      inside = point_within(sys, cur[j], tuple[j], eps, depth);
    if (inside) {
      double d = 0.0;
      for (std::size_t j = 0; j < tuple.size(); ++j)
        d = std::max(d, point_distance(sys, cur[j], tuple[j]));
      rep.return_times.push_back(n);
      rep.return_dists.push_back(d);
    }
  }
  analyze_gaps(rep);
  return rep;
}

const char* pair_verdict_name(PairVerdict v) {
  switch (v) {
    case PairVerdict::ProximalAtHorizon: return "proximal-at-horizon";
    case PairVerdict::DistalAtHorizon: return "distal-at-horizon";
    case PairVerdict::Undecided: return "undecided";
  }
  return "?";
}

PairReport proximal_pair(const SystemSpec& sys, const Point& x, const Point& y,
                         std::int64_t horizon, double threshold) {
  require_in_system(sys, x);
  require_in_system(sys, y);
  if (horizon < 1) throw std::invalid_argument("horizon must be >= 1");

  PairReport rep;
  rep.horizon = horizon;
  rep.threshold = threshold > 0.0
                      ? threshold
                      : (sys.kind == SystemKind::SubstitutionSubshift
                             ? kProximalThresholdSubshift
                             : kProximalThresholdTorus);

  double inf0 = 2.0, inf1 = 2.0;
  std::int64_t argmin = 0;
  const auto consider = [&](std::int64_t n, double d) {
    if (d < inf0) {
      inf0 = d;
      argmin = n;
    }
    if (n >= 1 && d < inf1) inf1 = d;
  };

  if (sys.kind == SystemKind::TorusSkew) {
    for (std::int64_t n = 0; n <= horizon; ++n) {
      const auto px = std::get<TorusPoint>(shift_point(sys, x, n));
      const auto py = std::get<TorusPoint>(shift_point(sys, y, n));
      consider(n, std::max(circle_distance(px.x, py.x),
                           circle_distance(px.y, py.y)));
    }
  } else {
    const auto& sx = std::get<SymbolicPoint>(x);
    const auto& sy = std::get<SymbolicPoint>(y);
    if (sx == sy) {
      consider(0, 0.0);
      consider(1, 0.0);
    } else {
      // Positions where the two words differ (or knowledge ends); the
      // separation at time n is 2^-(distance from n to the nearest such
      // position), so one linear sweep covers the whole horizon.
      std::vector<std::int64_t> diffs;
      const std::int64_t margin = kComparisonRadius;
      for (std::int64_t k = -margin; k <= horizon + margin; ++k) {
        auto lx = letter_at(sys.subst, sx, k);
        auto ly = letter_at(sys.subst, sy, k);
        if (!lx || !ly || *lx != *ly) diffs.push_back(k);
      }
      std::size_t ptr = 0;
      for (std::int64_t n = 0; n <= horizon; ++n) {
        while (ptr < diffs.size() && diffs[ptr] < n) ++ptr;
        std::int64_t m = kComparisonRadius;
        if (ptr < diffs.size()) m = std::min(m, diffs[ptr] - n);
        if (ptr > 0) m = std::min(m, n - diffs[ptr - 1]);
        const double d =
            (m >= kComparisonRadius || m >= 1074)
                ? 0.0
                : std::ldexp(1.0, static_cast<int>(-m));
        consider(n, d);
      }
    }
  }

  rep.inf_over_horizon = inf0;
  rep.liminf_estimate = inf1;
  rep.argmin_n = argmin;
  if (rep.liminf_estimate <= rep.threshold)
    rep.verdict = PairVerdict::ProximalAtHorizon;
  else if (rep.inf_over_horizon > 4.0 * rep.threshold)
    rep.verdict = PairVerdict::DistalAtHorizon;
  else
    rep.verdict = PairVerdict::Undecided;
  return rep;
}

namespace {

constexpr std::uint64_t kProlongSeed = 0x70726f6cull;

}  // namespace

FiniteClosedSet prolongation_point(const SystemSpec& sys, const Point& x,
                                   double delta, int samples, std::int64_t horizon,
                                   double eps) {
  require_in_system(sys, x);
  if (!(delta > 0.0)) throw std::invalid_argument("delta must be positive");
  if (samples < 1) throw std::invalid_argument("need at least one sample");
  if (horizon < 0) throw std::invalid_argument("horizon must be >= 0");

  std::vector<Point> starts;
  starts.push_back(x);

  if (sys.kind == SystemKind::TorusSkew) {
    SplitMix64 rng(kProlongSeed);
    const auto& tx = std::get<TorusPoint>(x);
    for (int i = 1; i < samples; ++i) {
      const double dx = (rng.next_unit() - 0.5) * delta;
      const double dy = (rng.next_unit() - 0.5) * delta;
      starts.push_back(make_torus_point(tx.x + dx, tx.y + dy));
    }
  } else {
    // Other points of the subshift sharing the central window of x:
    // occurrences of that window inside the base-a fixed point.
    const auto& sx = std::get<SymbolicPoint>(x);
    const std::int64_t D = dyadic_depth(delta);
    std::vector<Letter> w;
    for (std::int64_t j = -D; j < D; ++j) {
      auto l = letter_at(sys.subst, sx, j);
      if (!l)
        throw std::invalid_argument("point does not determine a window of the "
                                    "requested perturbation radius");
      w.push_back(*l);
    }
    const std::int64_t scan_cap = std::int64_t{1} << 21;
    for (std::int64_t pos = -kOrbitMembershipHorizon;
         pos < scan_cap && static_cast<int>(starts.size()) < samples; ++pos) {
      if (sx.seed_form() && *sx.base == BaseTag::A && sx.shift == pos) continue;
      bool match = true;
      for (std::int64_t j = -D; j < D && match; ++j)
        match = base_letter(sys.subst, BaseTag::A, pos + j) == w[static_cast<std::size_t>(j + D)];
      if (match) starts.push_back(make_seed_point(BaseTag::A, pos));
    }
  }

  // Sample-major accumulation (x's own orbit first), pruned on the fly.
  std::vector<Point> kept;
  const std::int64_t key_r = dyadic_depth(eps / 2.0);
  std::unordered_set<std::string> sym_keys;
  const double cell = eps / 2.0;
  const std::int64_t ncell = std::max<std::int64_t>(1, static_cast<std::int64_t>(std::ceil(1.0 / cell)));
  std::unordered_map<std::int64_t, std::vector<std::size_t>> grid;
  const auto cell_of = [&](const TorusPoint& t) {
    const auto cx = std::min<std::int64_t>(ncell - 1, static_cast<std::int64_t>(t.x / cell));
    const auto cy = std::min<std::int64_t>(ncell - 1, static_cast<std::int64_t>(t.y / cell));
    return cx * ncell + cy;
  };

  for (const auto& s0 : starts) {
    Point p = s0;
    for (std::int64_t n = 0; n <= horizon; ++n) {
      if (n > 0) p = shift_point(sys, p, 1);
      if (sys.kind == SystemKind::SubstitutionSubshift) {
        auto key = window_key(sys.subst, std::get<SymbolicPoint>(p), key_r);
        if (key && sym_keys.insert(*key).second) kept.push_back(p);
      } else {
        const auto& tp = std::get<TorusPoint>(p);
        const std::int64_t cx = cell_of(tp) / ncell, cy = cell_of(tp) % ncell;
        bool blocked = false;
        for (std::int64_t ox = -1; ox <= 1 && !blocked; ++ox) {
          for (std::int64_t oy = -1; oy <= 1 && !blocked; ++oy) {
            const std::int64_t c = ((cx + ox + ncell) % ncell) * ncell +
                                   ((cy + oy + ncell) % ncell);
            auto it = grid.find(c);
            if (it == grid.end()) continue;
            for (std::size_t ki : it->second) {
              if (point_distance(sys, p, kept[ki]) <= eps / 2.0) {
                blocked = true;
                break;
              }
            }
          }
        }
        if (!blocked) {
          grid[cell_of(tp)].push_back(kept.size());
          kept.push_back(p);
        }
      }
    }
  }
  return make_closed_set(sys, kept, eps);
}

DStarEstimate d_star_estimate(const FiniteClosedSet& A, std::int64_t horizon,
                              double eps) {
  if (horizon < 0) throw std::invalid_argument("horizon must be >= 0");
  DStarEstimate est;
  const bool sym = A.system.kind == SystemKind::SubstitutionSubshift;
  const std::int64_t key_r = dyadic_depth(eps / 2.0);
  std::unordered_set<std::string> seen;

  const auto consider = [&](const std::vector<Point>& cur, std::int64_t n) {
    bool fresh = false;
    if (sym) {
      auto sig = set_signature(A.system.subst, cur, key_r);
      fresh = sig && seen.insert(*sig).second;
      if (!sig) {
        // Window-limited points: fall back to direct comparisons.
        fresh = true;
        for (const auto& m : est.members)
          if (hausdorff_within_points(A.system, cur, m.points, eps / 2.0, key_r)) {
            fresh = false;
            break;
          }
      }
    } else {
      fresh = true;
      for (const auto& m : est.members) {
        if (hausdorff_within(make_closed_set(A.system, cur, A.resolution), m,
                             eps / 2.0)) {
          fresh = false;
          break;
        }
      }
    }
    if (fresh) {
      est.members.push_back(make_closed_set(A.system, cur, eps));
      est.times.push_back(n);
    }
  };

  // The whole group orbit, walked outward: 0, +1, -1, +2, -2, ...
  std::vector<Point> fwd = A.points, bwd = A.points;
  consider(fwd, 0);
  for (std::int64_t n = 1; n <= horizon; ++n) {
    for (auto& p : fwd) p = shift_point(A.system, p, 1);
    consider(fwd, n);
    for (auto& p : bwd) p = shift_point(A.system, p, -1);
    consider(bwd, -n);
  }
  return est;
}

QuasifactorReport quasifactor_check(const std::vector<FiniteClosedSet>& collection,
                                    double eps, std::int64_t horizon) {
  if (collection.empty())
    throw std::invalid_argument("quasifactor_check needs a nonempty collection");
  for (const auto& m : collection)
    if (!same_system(m.system, collection.front().system))
      throw std::invalid_argument("collection mixes systems");

  QuasifactorReport rep;
  rep.eps = eps;
  rep.horizon = horizon;
  if (collection.size() == 1) {
    rep.minimal = true;
    return rep;
  }

  const SystemSpec& sys = collection.front().system;
  const bool sym = sys.kind == SystemKind::SubstitutionSubshift;
  const std::int64_t key_r = dyadic_depth(eps);

  // Signature -> member indices (subshift fast path).
  std::unordered_map<std::string, std::vector<std::size_t>> sig_index;
  bool signatures_ok = sym;
  if (sym) {
    for (std::size_t j = 0; j < collection.size(); ++j) {
      auto sig = set_signature(sys.subst, collection[j].points, key_r);
      if (!sig) {
        signatures_ok = false;
        break;
      }
      sig_index[*sig].push_back(j);
    }
  }

  for (std::size_t i = 0; i < collection.size(); ++i) {
    std::set<std::size_t> unhit;
    for (std::size_t j = 0; j < collection.size(); ++j)
      if (j != i) unhit.insert(j);

    std::vector<Point> cur = collection[i].points;
    // The member itself covers collection entries it already eps-matches.
    for (std::int64_t n = 0; n <= horizon && !unhit.empty(); ++n) {
      if (n > 0)
        for (auto& p : cur) p = shift_point(sys, p, 1);
      if (signatures_ok) {
        auto sig = set_signature(sys.subst, cur, key_r);
        if (!sig) continue;
        auto it = sig_index.find(*sig);
        if (it == sig_index.end()) continue;
        for (std::size_t j : it->second) unhit.erase(j);
      } else {
        for (auto it = unhit.begin(); it != unhit.end();) {
          if (hausdorff_within_points(sys, cur, collection[*it].points, eps,
                                      key_r))
            it = unhit.erase(it);
          else
            ++it;
        }
      }
    }
    if (!unhit.empty()) {
      rep.minimal = false;
      rep.witness = {i, *unhit.begin()};
      return rep;
    }
  }
  rep.minimal = true;
  return rep;
}

FiniteClosedSet x_standin(const SystemSpec& sys, double eps) {
  if (sys.kind == SystemKind::TorusSkew) {
    const auto m = static_cast<std::int64_t>(std::ceil(1.0 / eps));
    const double pitch = 1.0 / static_cast<double>(m);
    std::vector<Point> pts;
    pts.reserve(static_cast<std::size_t>(m * m));
    for (std::int64_t i = 0; i < m; ++i)
      for (std::int64_t j = 0; j < m; ++j)
        pts.push_back(make_torus_point(i * pitch, j * pitch));
    return make_closed_set(sys, pts, eps);
  }

  // One representative per admissible central word of length 2D; the factor
  // collection must be stable when the scan doubles, otherwise widen.
  const std::int64_t D = dyadic_depth(eps);
  const std::size_t L = static_cast<std::size_t>(2 * D);
  std::string tail = "1";  // right half of the base-a fixed point
  std::int64_t P = std::max<std::int64_t>(4096, 512 * D);
  std::map<std::string, std::int64_t> first_pos;
  while (true) {
    while (static_cast<std::int64_t>(tail.size()) < 2 * P + 2 * D)
      tail = substitute(sys.subst, tail);
    std::map<std::string, std::int64_t> half, full;
    for (std::int64_t s = 0; s + static_cast<std::int64_t>(L) <= 2 * P; ++s) {
      const std::string w = tail.substr(static_cast<std::size_t>(s), L);
      full.try_emplace(w, s);
      if (s < P) half.try_emplace(w, s);
    }
    if (half.size() == full.size()) {
      first_pos = std::move(full);
      break;
    }
    P *= 2;
    if (P > (std::int64_t{1} << 20))
      throw std::runtime_error("factor collection did not stabilize");
  }
  std::vector<Point> pts;
  pts.reserve(first_pos.size());
  for (const auto& [w, s] : first_pos)
    pts.push_back(make_seed_point(BaseTag::A, s + D));
  return make_closed_set(sys, pts, eps);
}

FiniteClosedSet x_standin_interval(const SystemSpec& sys, std::int64_t count,
                                   double eps) {
  require_subshift(sys);
  if (count < 1) throw std::invalid_argument("count must be >= 1");
  std::vector<Point> pts;
  pts.reserve(static_cast<std::size_t>(count));
  for (std::int64_t pos = 0; pos < count; ++pos)
    pts.push_back(make_seed_point(BaseTag::A, pos));
  return make_closed_set(sys, pts, eps);
}

std::vector<TimeNet> net_catalog(const SystemSpec& sys,
                                 const std::vector<TorusPoint>& probe,
                                 std::int64_t horizon) {
  std::vector<TimeNet> nets;
  if (sys.kind == SystemKind::SubstitutionSubshift) {
    for (const auto& t : shipped_tables())
      nets.push_back(timenet_for_idempotent(sys, t, kDefaultNetRadii, horizon));
  } else if (!probe.empty()) {
    nets.push_back(identity_timenet(sys, probe, horizon));
  }
  for (std::int64_t t = -8; t <= 8; ++t) nets.push_back(constant_net(sys, t));
  return nets;
}

DStarCrossCheck d_star_crosscheck(const FiniteClosedSet& A,
                                  const DStarEstimate& estimate, double eps,
                                  std::int64_t horizon) {
  std::vector<TorusPoint> probe;
  if (A.system.kind == SystemKind::TorusSkew)
    for (const auto& p : A.points) probe.push_back(std::get<TorusPoint>(p));

  DStarCrossCheck check;
  check.all_covered = true;
  for (const auto& net : net_catalog(A.system, probe, horizon)) {
    const ClusterSet c = cluster_set(A, net, eps);
    if (!c.converged) continue;
    double best = 2.0;
    std::size_t best_i = 0;
    for (std::size_t i = 0; i < estimate.members.size(); ++i) {
      const double d = hausdorff(c.result, estimate.members[i]);
      if (d < best) {
        best = d;
        best_i = i;
      }
    }
    check.labels.push_back(net.label);
    check.nearest_member.push_back(best_i);
    check.distance.push_back(best);
    if (best > 2.0 * eps) check.all_covered = false;
  }
  return check;
}

}  // namespace hyperlab
