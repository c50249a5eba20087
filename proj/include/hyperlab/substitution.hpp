#pragma once
//
// Constant-length binary substitutions and their two-sided fixed points.
//
// A substitution maps each letter of {0,1} to a nonempty word over {0,1}.
// When the image of l ends with l and the image of r starts with r, the seed
// pair (l.r) extends to a unique bi-infinite fixed point with l at index -1
// and r at index 0. Letters of that fixed point are computed on demand from
// the base-L digits of the index, L being the constant rule length.

#include <cstdint>
#include <string>
#include <vector>

namespace hyperlab {

using Letter = std::uint8_t;  // 0 or 1

struct Substitution {
  std::vector<std::string> rules;  // rules[letter], words over '0'/'1'

  // Constant rule length. Throws std::invalid_argument if rules are empty,
  // of mixed length, or contain characters outside {0,1}.
  int length() const;

  const std::string& rule(Letter l) const { return rules[l]; }

  bool operator==(const Substitution&) const = default;
};

// The square of the Morse-Thue substitution: 0 -> 0110, 1 -> 1001.
Substitution morse_square();

// Concatenation of rule images; |result| = length() * |w|.
std::string substitute(const Substitution& s, const std::string& w);

// The four seed pairs (letter at -1, letter at 0) that admit two-sided
// extension for the Morse-square rules, and their traditional names.
//   A    = (1,1)      B    = (0,1)
//   ABar = (0,0)      BBar = (1,0)
// ABar/BBar are the bitwise complements ("duals") of A/B.
enum class BaseTag : std::uint8_t { A = 0, B = 1, ABar = 2, BBar = 3 };

inline constexpr BaseTag kAllBases[4] = {BaseTag::A, BaseTag::B, BaseTag::ABar,
                                         BaseTag::BBar};

struct SeedPair {
  Letter left;   // letter at index -1
  Letter right;  // letter at index 0
};

SeedPair tag_seed(BaseTag tag);

// Inverse of tag_seed. Throws std::invalid_argument for letters outside {0,1}.
BaseTag seed_tag(Letter left, Letter right);

// The dual base: bitwise complement of the fixed point.
BaseTag dual(BaseTag tag);

const char* tag_name(BaseTag tag);         // "a", "b", "abar", "bbar"
BaseTag tag_from_name(const std::string&); // throws on unknown name

// Validates that the seed pair extends two-sidedly under s (image of left
// ends with left, image of right starts with right) and returns its tag.
// Throws std::invalid_argument otherwise.
BaseTag fixed_point_tag(const Substitution& s, Letter left, Letter right);

// Letter at index i of the bi-infinite fixed point with the given seed tag.
// O(log |i|): walks the base-L digits of the index.
Letter base_letter(const Substitution& s, BaseTag tag, std::int64_t i);

}  // namespace hyperlab
