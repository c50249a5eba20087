#pragma once
//
// The exact action of the four minimal idempotents of the Morse-square
// system. Each acts as a permutation-like table on the four distinguished
// orbits (equivariantly: table(sigma^k p) = sigma^k table(p)) and as the
// identity everywhere else. Explicit windows are tested for orbit
// membership up to shift kOrbitMembershipHorizon before the table is used.

#include <array>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "hyperlab/hyperspace.hpp"
#include "hyperlab/system.hpp"

namespace hyperlab {

struct IdempotentTable {
  std::string name;
  std::array<BaseTag, 4> map;  // images of A, B, ABar, BBar in tag order

  BaseTag act(BaseTag t) const { return map[static_cast<std::size_t>(t)]; }
  bool same_action(const IdempotentTable& o) const { return map == o.map; }
};

IdempotentTable table_u1();
IdempotentTable table_v1();
IdempotentTable table_u2();
IdempotentTable table_v2();
IdempotentTable identity_table();

// The four minimal idempotents, in the order u1, v1, u2, v2.
std::vector<IdempotentTable> shipped_tables();

// Accepts "u1", "v1", "u2", "v2", "id"; throws on anything else.
IdempotentTable table_from_name(const std::string& name);

// Functional composition: (s after t)(p) = s(t(p)).
IdempotentTable compose_tables(const IdempotentTable& s, const IdempotentTable& t);

// The quasi order on idempotents: s is above t when (s after t) acts as t.
enum class QuasiOrder { Equivalent, LeftAboveRight, RightAboveLeft, Incomparable };
QuasiOrder quasi_order_check(const IdempotentTable& s, const IdempotentTable& t);
const char* quasi_order_name(QuasiOrder q);

// (tag, shift) identification of a symbolic point against the distinguished
// orbits, searched over |shift| <= kOrbitMembershipHorizon.
struct OrbitMatch {
  BaseTag tag;
  std::int64_t shift;
};

// Explicit windows: the match must hold on every stored letter. Seed-form
// points are identified structurally (their own tag and shift) when the
// shift is within the membership horizon.
std::optional<OrbitMatch> identify_orbit_point(const Substitution& s,
                                               const SymbolicPoint& p);

// Identification at a prescribed radius: the candidate must agree with p on
// every index |i| < radius. Candidates are scanned by (|shift|, shift, tag),
// so the canonically nearest representative wins. Used for recognizing
// limits of orbit iterates; radius must be >= 1.
std::optional<OrbitMatch> identify_at_radius(const Substitution& s,
                                             const SymbolicPoint& p,
                                             std::int64_t radius);

// Table action on a point of the Morse system: sigma^k(base) maps to
// sigma^k(table(base)); everything else is fixed.
Point idempotent_apply(const SystemSpec& sys, const IdempotentTable& t,
                       const Point& p);

// idempotent_apply(t, p) == p, exactly for orbit points and at the window
// horizon otherwise.
bool in_fixed_set(const SystemSpec& sys, const IdempotentTable& t, const Point& p);

// Fixed by every shipped table (off the four distinguished orbits).
bool distal_point(const SystemSpec& sys, const Point& p);

// Elementwise image with duplicates merged.
FiniteClosedSet apply_to_finite_set(const IdempotentTable& t,
                                    const FiniteClosedSet& A);

}  // namespace hyperlab
