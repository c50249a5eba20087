#include "hyperlab/substitution.hpp"

#include <array>
#include <stdexcept>

namespace hyperlab {

int Substitution::length() const {
  if (rules.size() != 2 || rules[0].empty() || rules[1].empty())
    throw std::invalid_argument("substitution needs nonempty rules for 0 and 1");
  if (rules[0].size() != rules[1].size())
    throw std::invalid_argument("substitution rules must have constant length");
  for (const auto& r : rules)
    for (char c : r)
      if (c != '0' && c != '1')
        throw std::invalid_argument("substitution rules must be over {0,1}");
  return static_cast<int>(rules[0].size());
}

Substitution morse_square() { return Substitution{{"0110", "1001"}}; }

std::string substitute(const Substitution& s, const std::string& w) {
  std::string out;
  out.reserve(w.size() * s.rules[0].size());
  for (char c : w) {
    if (c != '0' && c != '1')
      throw std::invalid_argument("word must be over {0,1}");
    out += s.rule(static_cast<Letter>(c - '0'));
  }
  return out;
}

SeedPair tag_seed(BaseTag tag) {
  switch (tag) {
    case BaseTag::A:    return {1, 1};
    case BaseTag::B:    return {0, 1};
    case BaseTag::ABar: return {0, 0};
    case BaseTag::BBar: return {1, 0};
  }
  throw std::invalid_argument("bad base tag");
}

BaseTag seed_tag(Letter left, Letter right) {
  if (left > 1 || right > 1)
    throw std::invalid_argument("seed letters must be 0 or 1");
  if (left == 1 && right == 1) return BaseTag::A;
  if (left == 0 && right == 1) return BaseTag::B;
  if (left == 0 && right == 0) return BaseTag::ABar;
  return BaseTag::BBar;
}

BaseTag dual(BaseTag tag) {
  switch (tag) {
    case BaseTag::A:    return BaseTag::ABar;
    case BaseTag::B:    return BaseTag::BBar;
    case BaseTag::ABar: return BaseTag::A;
    case BaseTag::BBar: return BaseTag::B;
  }
  throw std::invalid_argument("bad base tag");
}

const char* tag_name(BaseTag tag) {
  switch (tag) {
    case BaseTag::A:    return "a";
    case BaseTag::B:    return "b";
    case BaseTag::ABar: return "abar";
    case BaseTag::BBar: return "bbar";
  }
  return "?";
}

BaseTag tag_from_name(const std::string& name) {
  for (BaseTag t : kAllBases)
    if (name == tag_name(t)) return t;
  throw std::invalid_argument("unknown base name: " + name);
}

BaseTag fixed_point_tag(const Substitution& s, Letter left, Letter right) {
  s.length();  // validate rules
  if (left > 1 || right > 1)
    throw std::invalid_argument("unsupported seed: letters must be 0 or 1");
  const std::string& rl = s.rule(left);
  const std::string& rr = s.rule(right);
  if (rl.back() != static_cast<char>('0' + left) ||
      rr.front() != static_cast<char>('0' + right))
    throw std::invalid_argument("unsupported seed: pair does not extend two-sidedly");
  return seed_tag(left, right);
}

Letter base_letter(const Substitution& s, BaseTag tag, std::int64_t i) {
  const int L = static_cast<int>(s.rules[0].size());
  const SeedPair seed = tag_seed(tag);

  // Base-L digits of the block index, most significant first. The fixed
  // point satisfies x[L*m + j] = rule(x[m])[j] on the right half and the
  // mirrored relation on the left half.
  std::array<int, 64> digits{};
  int ndig = 0;
  Letter letter;
  if (i >= 0) {
    std::int64_t m = i;
    while (m > 0) { digits[ndig++] = static_cast<int>(m % L); m /= L; }
    letter = seed.right;
    for (int k = ndig - 1; k >= 0; --k)
      letter = static_cast<Letter>(s.rules[letter][digits[k]] - '0');
  } else {
    std::int64_t m = -i - 1;  // distance from index -1
    while (m > 0) { digits[ndig++] = static_cast<int>(m % L); m /= L; }
    letter = seed.left;
    for (int k = ndig - 1; k >= 0; --k)
      letter = static_cast<Letter>(s.rules[letter][L - 1 - digits[k]] - '0');
  }
  return letter;
}

}  // namespace hyperlab
