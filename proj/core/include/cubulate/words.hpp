#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace cubulate {

using Letter = std::uint32_t;
using Word = std::vector<Letter>;

// Alphabet of group generators together with the formal-inverse involution.
// Letter order is the declared order; it induces the shortlex order used by
// the rewriting layer and by all deterministic indexing.
class Alphabet {
public:
  Alphabet() = default;
  // names[i] is the print name of letter i, inverse[i] its involution partner.
  // The involution must be fixed-point-free or the identity (all letters
  // self-inverse); mixing the two is rejected.
  Alphabet(std::vector<std::string> names, std::vector<Letter> inverse);

  std::size_t size() const { return names_.size(); }
  const std::string& name(Letter l) const { return names_[l]; }
  Letter inverse(Letter l) const { return inverse_[l]; }
  bool self_inverse() const { return self_inverse_; }

  std::optional<Letter> find(const std::string& name) const;

  // Parses a word.  Letters may be separated by whitespace or, when names are
  // unambiguous, concatenated.  "x^-1" means the involution partner of x.
  // "1" denotes the empty word.  Throws MalformedInput on unknown symbols.
  Word parse_word(const std::string& text) const;
  std::string print_word(const Word& w) const;

  Word invert(const Word& w) const;

  bool operator==(const Alphabet& other) const = default;

private:
  std::vector<std::string> names_;
  std::vector<Letter> inverse_;
  bool self_inverse_ = false;
  bool all_single_char_ = true;
};

// Shortlex: compare by length, then lexicographically by letter index.
bool shortlex_less(const Word& a, const Word& b);

struct WordHash {
  std::size_t operator()(const Word& w) const {
    std::size_t h = 1469598103934665603ull;
    for (Letter l : w) {
      h ^= l + 0x9e3779b97f4a7c15ull;
      h *= 1099511628211ull;
    }
    return h;
  }
};

} // namespace cubulate
