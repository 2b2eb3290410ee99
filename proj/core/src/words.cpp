#include "cubulate/words.hpp"

#include "cubulate/errors.hpp"

#include <algorithm>
#include <cctype>

namespace cubulate {

Alphabet::Alphabet(std::vector<std::string> names, std::vector<Letter> inverse)
    : names_(std::move(names)), inverse_(std::move(inverse)) {
  if (names_.size() != inverse_.size())
    fail(ErrorKind::MalformedInput, "alphabet",
         "names and involution tables differ in length");
  std::size_t fixed = 0;
  for (std::size_t i = 0; i < names_.size(); ++i) {
    if (names_[i].empty() || std::isdigit(static_cast<unsigned char>(names_[i][0])))
      fail(ErrorKind::MalformedInput, "alphabet",
           "bad generator name '" + names_[i] + "'");
    for (std::size_t j = i + 1; j < names_.size(); ++j)
      if (names_[i] == names_[j])
        fail(ErrorKind::MalformedInput, "alphabet",
             "duplicate generator name '" + names_[i] + "'");
    if (inverse_[i] >= names_.size() || inverse_[inverse_[i]] != i)
      fail(ErrorKind::MalformedInput, "alphabet",
           "involution is not a pairing at '" + names_[i] + "'");
    if (inverse_[i] == i) ++fixed;
    if (names_[i].size() > 1) all_single_char_ = false;
  }
  if (fixed != 0 && fixed != names_.size())
    fail(ErrorKind::MalformedInput, "alphabet",
         "involution mixes self-inverse and paired letters");
  self_inverse_ = fixed == names_.size() && !names_.empty();
}

std::optional<Letter> Alphabet::find(const std::string& name) const {
  for (std::size_t i = 0; i < names_.size(); ++i)
    if (names_[i] == name) return static_cast<Letter>(i);
  return std::nullopt;
}

Word Alphabet::parse_word(const std::string& text) const {
  Word out;
  std::size_t i = 0;
  auto skip_ws = [&] {
    while (i < text.size() && std::isspace(static_cast<unsigned char>(text[i]))) ++i;
  };
  skip_ws();
  if (text.substr(i) == "1") return out;
  while (i < text.size()) {
    // longest-match against declared names
    std::size_t best_len = 0;
    Letter best = 0;
    for (std::size_t l = 0; l < names_.size(); ++l) {
      const std::string& n = names_[l];
      if (n.size() > best_len && text.compare(i, n.size(), n) == 0) {
        best_len = n.size();
        best = static_cast<Letter>(l);
      }
    }
    if (best_len == 0)
      fail(ErrorKind::MalformedInput, "word",
           "unknown symbol at '" + text.substr(i, 8) + "'");
    i += best_len;
    if (text.compare(i, 3, "^-1") == 0) {
      best = inverse_[best];
      i += 3;
    }
    out.push_back(best);
    skip_ws();
  }
  return out;
}

std::string Alphabet::print_word(const Word& w) const {
  if (w.empty()) return "1";
  std::string out;
  for (std::size_t i = 0; i < w.size(); ++i) {
    if (!all_single_char_ && i) out += ' ';
    out += names_[w[i]];
  }
  return out;
}

Word Alphabet::invert(const Word& w) const {
  Word out;
  out.reserve(w.size());
  for (auto it = w.rbegin(); it != w.rend(); ++it) out.push_back(inverse_[*it]);
  return out;
}

bool shortlex_less(const Word& a, const Word& b) {
  if (a.size() != b.size()) return a.size() < b.size();
  return std::lexicographical_compare(a.begin(), a.end(), b.begin(), b.end());
}

} // namespace cubulate
