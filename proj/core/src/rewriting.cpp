#include "cubulate/rewriting.hpp"

#include "cubulate/errors.hpp"

#include <algorithm>
#include <cstdlib>

namespace cubulate {

Budgets budgets_from_env() {
  Budgets b;
  auto read = [](const char* name, std::size_t& slot) {
    const char* v = std::getenv(name);
    if (!v) return;
    char* end = nullptr;
    unsigned long long n = std::strtoull(v, &end, 10);
    if (*v == '\0' || end == nullptr || *end != '\0' || n == 0)
      fail(ErrorKind::MalformedInput, name,
           std::string("expected a positive integer, got '") + v + "'");
    slot = static_cast<std::size_t>(n);
  };
  read("CUBULATE_BUDGET_REWRITE", b.rewrite_steps);
  read("CUBULATE_BUDGET_VERTICES", b.ball_vertices);
  read("CUBULATE_BUDGET_WALLS", b.walls);
  read("CUBULATE_BUDGET_ZERO_CUBES", b.zero_cubes);
  read("CUBULATE_BUDGET_MAX_DIM", b.max_cube_dim);
  return b;
}

std::string BuiltinTag::to_string() const {
  switch (kind) {
    case BuiltinKind::FreeGroup: return "FreeGroup(" + std::to_string(rank) + ")";
    case BuiltinKind::FreeAbelian: return "FreeAbelian(" + std::to_string(rank) + ")";
    case BuiltinKind::SurfaceGenus2: return "SurfaceGenus2";
    case BuiltinKind::RightAngledCoxeter:
    case BuiltinKind::RightAngledArtin: {
      std::string s = kind == BuiltinKind::RightAngledCoxeter
                          ? "RightAngledCoxeter("
                          : "RightAngledArtin(";
      for (std::size_t i = 0; i < vertices.size(); ++i)
        s += (i ? " " : "") + vertices[i];
      s += ";";
      for (std::size_t i = 0; i < edges.size(); ++i)
        s += (i ? " " : "") + vertices[edges[i].first] + "-" +
             vertices[edges[i].second];
      return s + ")";
    }
  }
  return "?";
}

GroupPresentation::GroupPresentation(Alphabet alphabet, std::vector<Rule> rules,
                                     bool confluence_declared,
                                     std::optional<BuiltinTag> builtin)
    : alphabet_(std::move(alphabet)), rules_(std::move(rules)),
      confluence_declared_(confluence_declared), builtin_(std::move(builtin)) {
  for (const Rule& r : rules_) {
    for (Letter l : r.lhs)
      if (l >= alphabet_.size())
        fail(ErrorKind::MalformedInput, "rewriting", "rule letter out of range");
    for (Letter l : r.rhs)
      if (l >= alphabet_.size())
        fail(ErrorKind::MalformedInput, "rewriting", "rule letter out of range");
    max_lhs_ = std::max(max_lhs_, r.lhs.size());
  }
  check_termination();
  mode_ = confluence_declared_ ? NfMode::Rewrite : NfMode::ReducedOnly;
  exact_identity_ = confluence_declared_;
}

bool GroupPresentation::letters_commute(Letter a, Letter b) const {
  if (commute_.empty()) return false;
  return commute_[a * alphabet_.size() + b] != 0;
}

void GroupPresentation::check_termination() const {
  for (const Rule& r : rules_)
    if (!shortlex_less(r.rhs, r.lhs))
      fail(ErrorKind::MalformedInput, "rewriting",
           "rule does not decrease shortlex order: '" +
               alphabet_.print_word(r.lhs) + "' -> '" +
               alphabet_.print_word(r.rhs) + "'");
}

bool GroupPresentation::infinite_growth() const {
  if (!builtin_) return false;
  switch (builtin_->kind) {
    case BuiltinKind::FreeGroup:
    case BuiltinKind::FreeAbelian:
      return builtin_->rank >= 1;
    case BuiltinKind::SurfaceGenus2:
      return true;
    case BuiltinKind::RightAngledArtin:
      return !builtin_->vertices.empty();
    case BuiltinKind::RightAngledCoxeter: {
      // infinite exactly when two generators are unrelated
      std::size_t n = builtin_->vertices.size();
      return builtin_->edges.size() < n * (n - 1) / 2;
    }
  }
  return false;
}

Word GroupPresentation::normal_form(const Word& w, std::size_t budget) const {
  for (Letter l : w)
    if (l >= alphabet_.size())
      fail(ErrorKind::MalformedInput, "rewriting", "letter outside alphabet");
  if (mode_ == NfMode::GraphSort) return graph_sort(w);
  return rewrite(w, budget);
}

Word GroupPresentation::rewrite(const Word& w, std::size_t budget) const {
  Word cur = w;
  std::size_t steps = 0;
  std::size_t pos = 0;
  while (pos < cur.size()) {
    bool fired = false;
    for (const Rule& r : rules_) {
      if (r.lhs.size() > cur.size() - pos) continue;
      if (std::equal(r.lhs.begin(), r.lhs.end(), cur.begin() + pos)) {
        if (++steps > budget)
          fail(ErrorKind::Divergence, "rewriting",
               "rewrite budget of " + std::to_string(budget) +
                   " steps exhausted");
        Word next;
        next.reserve(cur.size() - r.lhs.size() + r.rhs.size());
        next.insert(next.end(), cur.begin(), cur.begin() + pos);
        next.insert(next.end(), r.rhs.begin(), r.rhs.end());
        next.insert(next.end(), cur.begin() + pos + r.lhs.size(), cur.end());
        cur = std::move(next);
        pos = pos >= max_lhs_ ? pos - max_lhs_ + 1 : 0;
        fired = true;
        break;
      }
    }
    if (!fired) ++pos;
  }
  return cur;
}

// Cancel inverse pairs whose gap commutes with them, iterating to a fixpoint,
// then emit the lexicographically least shuffle of the surviving letters.
// Reduced words of a commuting-letter group are unique up to such shuffles,
// so the result is the shortlex-least representative.
Word GroupPresentation::graph_sort(const Word& w) const {
  Word out = w;
  bool changed = true;
  while (changed) {
    changed = false;
    Word next;
    for (Letter l : out) {
      Letter li = alphabet_.inverse(l);
      bool cancelled = false;
      for (std::size_t t = next.size(); t-- > 0;) {
        if (next[t] == li) {
          next.erase(next.begin() + static_cast<std::ptrdiff_t>(t));
          cancelled = true;
          changed = true;
          break;
        }
        if (!letters_commute(next[t], l)) break;
      }
      if (!cancelled) next.push_back(l);
    }
    out = std::move(next);
  }
  Word sorted;
  sorted.reserve(out.size());
  while (!out.empty()) {
    std::size_t best = 0;
    for (std::size_t i = 1; i < out.size(); ++i) {
      if (out[i] >= out[best]) continue;
      bool avail = true;
      for (std::size_t j = 0; j < i && avail; ++j)
        avail = letters_commute(out[j], out[i]);
      if (avail) best = i;
    }
    sorted.push_back(out[best]);
    out.erase(out.begin() + static_cast<std::ptrdiff_t>(best));
  }
  return sorted;
}

Word GroupPresentation::normal_form(const std::string& text) const {
  return normal_form(alphabet_.parse_word(text));
}

Word GroupPresentation::multiply(const Word& g, const Word& h) const {
  Word w = g;
  w.insert(w.end(), h.begin(), h.end());
  return normal_form(w);
}

Word GroupPresentation::inverse(const Word& g) const {
  return normal_form(alphabet_.invert(g));
}

std::vector<CriticalPairFailure> GroupPresentation::check_local_confluence(
    std::size_t max_failures) const {
  std::vector<CriticalPairFailure> failures;
  const std::size_t budget = 1000000;
  auto consider = [&](const Word& overlap, const Word& via1, const Word& via2) {
    Word a = normal_form(via1, budget);
    Word b = normal_form(via2, budget);
    if (a != b) failures.push_back({overlap, std::move(a), std::move(b)});
  };
  for (const Rule& r1 : rules_) {
    for (const Rule& r2 : rules_) {
      if (failures.size() >= max_failures) return failures;
      // r2.lhs inside r1.lhs
      if (r2.lhs.size() <= r1.lhs.size()) {
        for (std::size_t i = 0; i + r2.lhs.size() <= r1.lhs.size(); ++i) {
          if (&r1 == &r2 && i == 0) continue;
          if (!std::equal(r2.lhs.begin(), r2.lhs.end(), r1.lhs.begin() + i))
            continue;
          Word via2(r1.lhs.begin(), r1.lhs.begin() + i);
          via2.insert(via2.end(), r2.rhs.begin(), r2.rhs.end());
          via2.insert(via2.end(), r1.lhs.begin() + i + r2.lhs.size(),
                      r1.lhs.end());
          consider(r1.lhs, r1.rhs, via2);
        }
      }
      // proper overlap: suffix of r1.lhs = prefix of r2.lhs
      std::size_t max_t = std::min(r1.lhs.size(), r2.lhs.size()) - 1;
      for (std::size_t t = 1; t <= max_t; ++t) {
        if (!std::equal(r2.lhs.begin(), r2.lhs.begin() + t,
                        r1.lhs.end() - t))
          continue;
        Word overlap = r1.lhs;
        overlap.insert(overlap.end(), r2.lhs.begin() + t, r2.lhs.end());
        Word via1 = r1.rhs;
        via1.insert(via1.end(), r2.lhs.begin() + t, r2.lhs.end());
        Word via2(r1.lhs.begin(), r1.lhs.end() - t);
        via2.insert(via2.end(), r2.rhs.begin(), r2.rhs.end());
        consider(overlap, via1, via2);
      }
    }
  }
  return failures;
}

bool GroupPresentation::operator==(const GroupPresentation& other) const {
  return alphabet_ == other.alphabet_ && rules_ == other.rules_ &&
         confluence_declared_ == other.confluence_declared_ &&
         builtin_ == other.builtin_;
}

} // namespace cubulate
