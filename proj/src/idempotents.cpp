#include "hyperlab/idempotents.hpp"

#include <algorithm>
#include <cstdlib>
#include <stdexcept>
#include <unordered_map>

namespace hyperlab {

namespace {

IdempotentTable make_table(std::string name, BaseTag a, BaseTag b, BaseTag abar,
                           BaseTag bbar) {
  return IdempotentTable{std::move(name), {a, b, abar, bbar}};
}

}  // namespace

IdempotentTable table_u1() {
  return make_table("u1", BaseTag::B, BaseTag::B, BaseTag::BBar, BaseTag::BBar);
}
IdempotentTable table_v1() {
  return make_table("v1", BaseTag::BBar, BaseTag::B, BaseTag::B, BaseTag::BBar);
}
IdempotentTable table_u2() {
  return make_table("u2", BaseTag::A, BaseTag::A, BaseTag::ABar, BaseTag::ABar);
}
IdempotentTable table_v2() {
  return make_table("v2", BaseTag::A, BaseTag::ABar, BaseTag::ABar, BaseTag::A);
}
IdempotentTable identity_table() {
  return make_table("id", BaseTag::A, BaseTag::B, BaseTag::ABar, BaseTag::BBar);
}

std::vector<IdempotentTable> shipped_tables() {
  return {table_u1(), table_v1(), table_u2(), table_v2()};
}

IdempotentTable table_from_name(const std::string& name) {
  if (name == "u1") return table_u1();
  if (name == "v1") return table_v1();
  if (name == "u2") return table_u2();
  if (name == "v2") return table_v2();
  if (name == "id") return identity_table();
  throw std::invalid_argument("unknown idempotent table: " + name);
}

IdempotentTable compose_tables(const IdempotentTable& s, const IdempotentTable& t) {
  IdempotentTable out;
  out.name = s.name + "*" + t.name;
  for (std::size_t i = 0; i < 4; ++i)
    out.map[i] = s.act(t.map[i]);
  return out;
}

QuasiOrder quasi_order_check(const IdempotentTable& s, const IdempotentTable& t) {
  const bool s_above = compose_tables(s, t).same_action(t);
  const bool t_above = compose_tables(t, s).same_action(s);
  if (s_above && t_above) return QuasiOrder::Equivalent;
  if (s_above) return QuasiOrder::LeftAboveRight;
  if (t_above) return QuasiOrder::RightAboveLeft;
  return QuasiOrder::Incomparable;
}

const char* quasi_order_name(QuasiOrder q) {
  switch (q) {
    case QuasiOrder::Equivalent: return "equivalent";
    case QuasiOrder::LeftAboveRight: return "left-above-right";
    case QuasiOrder::RightAboveLeft: return "right-above-left";
    case QuasiOrder::Incomparable: return "incomparable";
  }
  return "?";
}

namespace {

// Precomputed letters of the four distinguished orbits around the origin,
// wide enough to verify membership candidates without digit walks, plus a
// 16-letter window index for fast candidate lookup.
class OrbitCatalog {
 public:
  static constexpr std::int64_t kRange =
      2 * kOrbitMembershipHorizon;  // letters on [-kRange, kRange]

  explicit OrbitCatalog(const Substitution& s) : subst_(s) {
    for (std::size_t t = 0; t < 4; ++t) {
      letters_[t].resize(2 * kRange + 1);
      for (std::int64_t i = -kRange; i <= kRange; ++i)
        letters_[t][static_cast<std::size_t>(i + kRange)] =
            base_letter(s, kAllBases[t], i);
    }
    // Candidates ordered by (|shift|, shift, tag): nearest representative
    // first. The index key packs the 16 letters at [-8, 8).
    for (std::int64_t m = 0; m <= kOrbitMembershipHorizon; ++m) {
      for (std::int64_t j : {-m, m}) {
        if (j == 0 && m != 0) continue;
        for (std::size_t t = 0; t < 4; ++t) {
          std::uint32_t key = 0;
          for (std::int64_t i = -8; i < 8; ++i)
            key = (key << 1) | at(kAllBases[t], i + j);
          index_[key].push_back({kAllBases[t], j});
        }
      }
    }
  }

  Letter at(BaseTag tag, std::int64_t i) const {
    if (i >= -kRange && i <= kRange)
      return letters_[static_cast<std::size_t>(tag)]
                     [static_cast<std::size_t>(i + kRange)];
    return base_letter(subst_, tag, i);
  }

  const std::vector<OrbitMatch>* candidates(std::uint32_t key) const {
    auto it = index_.find(key);
    return it == index_.end() ? nullptr : &it->second;
  }

 private:
  Substitution subst_;
  std::array<std::vector<Letter>, 4> letters_;
  std::unordered_map<std::uint32_t, std::vector<OrbitMatch>> index_;
};

const OrbitCatalog& morse_catalog() {
  static const OrbitCatalog catalog(morse_square());
  return catalog;
}

bool is_morse(const Substitution& s) { return s == morse_square(); }

// Does sigma^j(tag) agree with p on every known letter with |i| < radius?
// Requires full knowledge of [-radius, radius) when `need_full` is set.
bool matches(const OrbitCatalog& cat, const Substitution& s,
             const SymbolicPoint& p, BaseTag tag, std::int64_t j,
             std::int64_t radius, bool need_full) {
  for (std::int64_t m = 0; m < radius; ++m) {
    for (std::int64_t i : {-m, m}) {
      if (i == 0 && m != 0) continue;
      auto lp = letter_at(s, p, i);
      if (!lp) {
        if (need_full) return false;
        continue;
      }
      if (*lp != cat.at(tag, i + j)) return false;
    }
  }
  return true;
}

std::optional<OrbitMatch> scan_candidates(const Substitution& s,
                                          const SymbolicPoint& p,
                                          std::int64_t radius, bool need_full) {
  const OrbitCatalog& cat = morse_catalog();

  // Fast path: if the central 16 letters are known, only candidates sharing
  // them can match.
  bool have_window8 = true;
  std::uint32_t key = 0;
  for (std::int64_t i = -8; i < 8; ++i) {
    auto l = letter_at(s, p, i);
    if (!l) {
      have_window8 = false;
      break;
    }
    key = (key << 1) | *l;
  }
  if (have_window8 && radius >= 8) {
    const auto* cands = cat.candidates(key);
    if (!cands) return std::nullopt;
    for (const auto& c : *cands)
      if (matches(cat, s, p, c.tag, c.shift, radius, need_full))
        return c;
    return std::nullopt;
  }

  for (std::int64_t m = 0; m <= kOrbitMembershipHorizon; ++m) {
    for (std::int64_t j : {-m, m}) {
      if (j == 0 && m != 0) continue;
      for (BaseTag tag : kAllBases)
        if (matches(cat, s, p, tag, j, radius, need_full))
          return OrbitMatch{tag, j};
    }
  }
  return std::nullopt;
}

}  // namespace

std::optional<OrbitMatch> identify_orbit_point(const Substitution& s,
                                               const SymbolicPoint& p) {
  if (!is_morse(s))
    throw std::invalid_argument("orbit identification is certified for the "
                                "Morse-square system only");
  if (p.seed_form()) {
    if (std::llabs(p.shift) <= kOrbitMembershipHorizon)
      return OrbitMatch{*p.base, p.shift};
    return std::nullopt;  // beyond the membership horizon
  }
  const Extent e = extent(p);
  const std::int64_t radius = std::max(std::llabs(e.lo), std::llabs(e.hi));
  return scan_candidates(s, p, radius, /*need_full=*/false);
}

std::optional<OrbitMatch> identify_at_radius(const Substitution& s,
                                             const SymbolicPoint& p,
                                             std::int64_t radius) {
  if (!is_morse(s))
    throw std::invalid_argument("orbit identification is certified for the "
                                "Morse-square system only");
  if (radius < 1) throw std::invalid_argument("identification radius must be >= 1");
  return scan_candidates(s, p, radius, /*need_full=*/true);
}

Point idempotent_apply(const SystemSpec& sys, const IdempotentTable& t,
                       const Point& p) {
  if (sys.kind != SystemKind::SubstitutionSubshift)
    throw std::invalid_argument("idempotent tables act on the Morse system");
  require_in_system(sys, p);
  const auto& sp = std::get<SymbolicPoint>(p);

  if (sp.seed_form())
    return make_seed_point(t.act(*sp.base), sp.shift);

  auto match = identify_orbit_point(sys.subst, sp);
  if (!match) return p;
  if (t.act(match->tag) == match->tag) return p;  // fixed: keep the window
  return make_seed_point(t.act(match->tag), match->shift);
}

bool in_fixed_set(const SystemSpec& sys, const IdempotentTable& t, const Point& p) {
  return points_agree(sys, idempotent_apply(sys, t, p), p);
}

bool distal_point(const SystemSpec& sys, const Point& p) {
  for (const auto& t : shipped_tables())
    if (!in_fixed_set(sys, t, p)) return false;
  return true;
}

FiniteClosedSet apply_to_finite_set(const IdempotentTable& t,
                                    const FiniteClosedSet& A) {
  std::vector<Point> image;
  image.reserve(A.points.size());
  for (const auto& p : A.points)
    image.push_back(idempotent_apply(A.system, t, p));
  return make_closed_set(A.system, std::move(image), A.resolution);
}

}  // namespace hyperlab
