#include "hyperlab/point.hpp"

#include <cmath>
#include <sstream>
#include <stdexcept>

namespace hyperlab {

SymbolicPoint make_seed_point(BaseTag tag, std::int64_t shift, bool complemented) {
  SymbolicPoint p;
  p.base = complemented ? dual(tag) : tag;
  p.shift = shift;
  return p;
}

SymbolicPoint make_window_point(std::string letters, std::int64_t lo,
                                bool complemented) {
  if (letters.empty())
    throw std::invalid_argument("explicit symbolic point needs a nonempty window");
  for (char& c : letters) {
    if (c != '0' && c != '1')
      throw std::invalid_argument("window letters must be 0 or 1");
    if (complemented) c = (c == '0') ? '1' : '0';
  }
  SymbolicPoint p;
  p.letters = std::move(letters);
  p.lo = lo;
  return p;
}

TorusPoint make_torus_point(double x, double y) {
  auto reduce = [](double v) {
    double r = v - std::floor(v);
    if (r >= 1.0) r = 0.0;  // guard against rounding at the seam
    if (r < 0.0) r = 0.0;
    return r;
  };
  return TorusPoint{reduce(x), reduce(y)};
}

Extent extent(const SymbolicPoint& p) {
  if (p.seed_form())
    return {std::numeric_limits<std::int64_t>::min() / 4,
            std::numeric_limits<std::int64_t>::max() / 4};
  return {p.lo, p.lo + static_cast<std::int64_t>(p.letters.size())};
}

std::optional<Letter> letter_at(const Substitution& s, const SymbolicPoint& p,
                                std::int64_t i) {
  if (p.seed_form()) return base_letter(s, *p.base, i + p.shift);
  if (i < p.lo || i >= p.lo + static_cast<std::int64_t>(p.letters.size()))
    return std::nullopt;
  return static_cast<Letter>(p.letters[static_cast<std::size_t>(i - p.lo)] - '0');
}

std::string window(const Substitution& s, const SymbolicPoint& p, int radius) {
  if (radius < 1) throw std::invalid_argument("window radius must be >= 1");
  std::string w;
  w.reserve(2 * static_cast<std::size_t>(radius));
  for (std::int64_t i = -radius; i < radius; ++i) {
    auto l = letter_at(s, p, i);
    if (!l)
      throw std::out_of_range("explicit window does not cover requested radius");
    w += static_cast<char>('0' + *l);
  }
  return w;
}

SymbolicPoint complement_point(const SymbolicPoint& p) {
  SymbolicPoint q = p;
  if (q.seed_form()) {
    q.base = dual(*q.base);
  } else {
    for (char& c : q.letters) c = (c == '0') ? '1' : '0';
  }
  return q;
}

SymbolicPoint shift_symbolic(const SymbolicPoint& p, std::int64_t n) {
  SymbolicPoint q = p;
  if (q.seed_form())
    q.shift += n;
  else
    q.lo -= n;
  return q;
}

bool symbolic_less(const SymbolicPoint& a, const SymbolicPoint& b) {
  if (a.seed_form() != b.seed_form()) return a.seed_form();
  if (a.seed_form()) {
    if (*a.base != *b.base) return *a.base < *b.base;
    return a.shift < b.shift;
  }
  if (a.lo != b.lo) return a.lo < b.lo;
  return a.letters < b.letters;
}

std::int64_t quantize_coord(double v) {
  return static_cast<std::int64_t>(std::llround(v * 1e9));
}

bool torus_less(const TorusPoint& a, const TorusPoint& b) {
  const std::int64_t ax = quantize_coord(a.x), bx = quantize_coord(b.x);
  if (ax != bx) return ax < bx;
  return quantize_coord(a.y) < quantize_coord(b.y);
}

bool torus_same(const TorusPoint& a, const TorusPoint& b) {
  return quantize_coord(a.x) == quantize_coord(b.x) &&
         quantize_coord(a.y) == quantize_coord(b.y);
}

bool point_less(const Point& a, const Point& b) {
  if (a.index() != b.index()) return a.index() < b.index();
  if (is_symbolic(a))
    return symbolic_less(std::get<SymbolicPoint>(a), std::get<SymbolicPoint>(b));
  return torus_less(std::get<TorusPoint>(a), std::get<TorusPoint>(b));
}

std::string point_id(const Point& p) {
  std::ostringstream os;
  if (is_symbolic(p)) {
    const auto& sp = std::get<SymbolicPoint>(p);
    if (sp.seed_form()) {
      os << tag_name(*sp.base);
      if (sp.shift >= 0) os << "+";
      os << sp.shift;
    } else {
      os << "w@" << sp.lo << ":" << sp.letters;
    }
  } else {
    const auto& tp = std::get<TorusPoint>(p);
    os.precision(12);
    os << "(" << tp.x << "," << tp.y << ")";
  }
  return os.str();
}

}  // namespace hyperlab
