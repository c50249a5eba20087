#pragma once
//
// Points of the two concrete phase spaces.
//
// A SymbolicPoint is either a lazily evaluated shift of a substitution fixed
// point (seed form: tag + shift, letters available at every index) or an
// explicit finite window (letters known only on [lo, lo + letters.size())).
// The "complemented" construction flag is folded away immediately: for seed
// form it flips the tag to its dual, for explicit form it flips the letters.
//
// A TorusPoint is a pair of reals reduced mod 1 into [0,1).

#include <cstdint>
#include <limits>
#include <optional>
#include <string>
#include <variant>

#include "hyperlab/substitution.hpp"

namespace hyperlab {

struct SymbolicPoint {
  std::optional<BaseTag> base;  // set iff seed form
  std::int64_t shift = 0;       // seed form: p[i] = base[i + shift]
  std::string letters;          // explicit form, '0'/'1'
  std::int64_t lo = 0;          // explicit form: index of letters[0]

  bool seed_form() const { return base.has_value(); }
  bool operator==(const SymbolicPoint&) const = default;
};

SymbolicPoint make_seed_point(BaseTag tag, std::int64_t shift = 0,
                              bool complemented = false);

// letters[k] sits at index lo + k; empty words are rejected.
SymbolicPoint make_window_point(std::string letters, std::int64_t lo,
                                bool complemented = false);

struct TorusPoint {
  double x = 0.0;
  double y = 0.0;
};

// Reduce both coordinates into [0,1).
TorusPoint make_torus_point(double x, double y);

using Point = std::variant<SymbolicPoint, TorusPoint>;

inline bool is_symbolic(const Point& p) {
  return std::holds_alternative<SymbolicPoint>(p);
}
inline bool is_torus(const Point& p) {
  return std::holds_alternative<TorusPoint>(p);
}

// Known index range [lo, hi) of a symbolic point (whole line for seed form).
struct Extent {
  std::int64_t lo;
  std::int64_t hi;
};
Extent extent(const SymbolicPoint& p);

// Letter at index i, or nullopt outside the known extent.
std::optional<Letter> letter_at(const Substitution& s, const SymbolicPoint& p,
                                std::int64_t i);

// Letters at indices -radius .. radius-1, as a word of length 2*radius.
// Throws std::out_of_range if an explicit window does not cover the range.
std::string window(const Substitution& s, const SymbolicPoint& p, int radius);

// Bitwise complement (seed form: dual tag, same shift).
SymbolicPoint complement_point(const SymbolicPoint& p);

// Index translation: (shifted p)[i] = p[i + n].
SymbolicPoint shift_symbolic(const SymbolicPoint& p, std::int64_t n);

// Fixed total order on point encodings: seed form before explicit form,
// seed form by (tag, shift), explicit by (lo, letters). Torus points order
// lexicographically after quantizing coordinates to 1e-9.
bool symbolic_less(const SymbolicPoint& a, const SymbolicPoint& b);
bool torus_less(const TorusPoint& a, const TorusPoint& b);
bool point_less(const Point& a, const Point& b);

// 1e-9 quantization used for torus ordering and value equality.
std::int64_t quantize_coord(double v);
bool torus_same(const TorusPoint& a, const TorusPoint& b);

// Short printable id, e.g. "a+3", "w@-2:0110", "(0.25,0.5)".
std::string point_id(const Point& p);

}  // namespace hyperlab
