#include "cubulate/errors.hpp"
#include "cubulate/rewriting.hpp"

#include <algorithm>
#include <set>
#include <string>
#include <utility>
#include <vector>

namespace cubulate {
namespace {

// paired alphabet: generator i owns letters 2i ("x") and 2i+1 ("X")
Alphabet paired_alphabet(const std::vector<std::string>& gens) {
  std::vector<std::string> names;
  std::vector<Letter> inv;
  for (std::size_t i = 0; i < gens.size(); ++i) {
    const std::string& g = gens[i];
    std::string up;
    if (g.size() == 1 && g[0] >= 'a' && g[0] <= 'z')
      up = std::string(1, static_cast<char>(g[0] - 'a' + 'A'));
    else
      up = g + "_inv";
    names.push_back(g);
    names.push_back(up);
    inv.push_back(static_cast<Letter>(2 * i + 1));
    inv.push_back(static_cast<Letter>(2 * i));
  }
  return Alphabet(std::move(names), std::move(inv));
}

std::vector<std::string> default_gens(int rank) {
  if (rank < 0 || rank > 26)
    fail(ErrorKind::MalformedInput, "builtin", "rank must be between 0 and 26");
  std::vector<std::string> gens;
  for (int i = 0; i < rank; ++i)
    gens.push_back(std::string(1, static_cast<char>('a' + i)));
  return gens;
}

void add_rule(std::vector<Rule>& rules, Word lhs, Word rhs) {
  Rule r{std::move(lhs), std::move(rhs)};
  if (std::find(rules.begin(), rules.end(), r) == rules.end())
    rules.push_back(std::move(r));
}

std::vector<Rule> cancellation_rules(std::size_t letters) {
  std::vector<Rule> rules;
  for (Letter l = 0; l < letters; ++l)
    add_rule(rules, Word{l, l ^ 1u}, Word{});
  return rules;
}

GroupPresentation verified_confluent(Alphabet alpha, std::vector<Rule> rules,
                                     BuiltinTag tag) {
  GroupPresentation p(std::move(alpha), std::move(rules), true, std::move(tag));
  auto failures = p.check_local_confluence(1);
  if (!failures.empty())
    fail(ErrorKind::Internal, "builtin",
         "builtin system is not locally confluent at '" +
             p.alphabet().print_word(failures[0].overlap) + "'");
  return p;
}

void check_graph(const std::vector<std::string>& vertices,
                 const std::vector<std::pair<int, int>>& edges) {
  int n = static_cast<int>(vertices.size());
  if (n == 0)
    fail(ErrorKind::MalformedInput, "builtin", "graph has no vertices");
  std::set<std::pair<int, int>> seen;
  for (auto [u, v] : edges) {
    if (u < 0 || v < 0 || u >= n || v >= n || u == v)
      fail(ErrorKind::MalformedInput, "builtin", "bad graph edge");
    auto key = std::minmax(u, v);
    if (!seen.insert({key.first, key.second}).second)
      fail(ErrorKind::MalformedInput, "builtin", "duplicate graph edge");
  }
}

} // namespace

GroupPresentation GroupPresentation::free_group(int rank) {
  Alphabet alpha = paired_alphabet(default_gens(rank));
  return verified_confluent(alpha, cancellation_rules(alpha.size()),
                            BuiltinTag{BuiltinKind::FreeGroup, rank, {}, {}});
}

GroupPresentation GroupPresentation::free_abelian(int rank) {
  Alphabet alpha = paired_alphabet(default_gens(rank));
  std::vector<Rule> rules = cancellation_rules(alpha.size());
  // move letters of later generators rightward past earlier ones
  for (int j = 1; j < rank; ++j)
    for (int i = 0; i < j; ++i)
      for (Letter sj : {Letter(2 * j), Letter(2 * j + 1)})
        for (Letter si : {Letter(2 * i), Letter(2 * i + 1)})
          add_rule(rules, Word{sj, si}, Word{si, sj});
  return verified_confluent(alpha, std::move(rules),
                            BuiltinTag{BuiltinKind::FreeAbelian, rank, {}, {}});
}

// Free reduction plus relator rules.  The relator satisfies the 1/8 small
// cancellation condition (no two of its sixteen cyclic readings share a
// two-letter subword), which has two consequences used here: any nonempty
// irreducible word is a nontrivial element, and every trivial word reduces to
// the empty word under any greedy strategy.  So is_identity is exact even
// though these rules are not confluent and normal forms are not canonical;
// shortlex completion of this system does not terminate.
GroupPresentation GroupPresentation::surface_genus2() {
  Alphabet alpha = paired_alphabet(default_gens(4));
  // relator a b a^-1 b^-1 c d c^-1 d^-1 over letters a=0 A=1 b=2 B=3 ...
  Word rel{0, 2, 1, 3, 4, 6, 5, 7};
  std::vector<Word> rotations;
  for (const Word& base : {rel, alpha.invert(rel)})
    for (std::size_t k = 0; k < base.size(); ++k) {
      Word w(base.begin() + k, base.end());
      w.insert(w.end(), base.begin(), base.begin() + k);
      rotations.push_back(std::move(w));
    }
  std::vector<Rule> rules = cancellation_rules(alpha.size());
  for (const Word& w : rotations) {
    // more than half of the relator rewrites to the inverse of the rest
    Word lhs(w.begin(), w.begin() + 5);
    Word rhs = alpha.invert(Word(w.begin() + 5, w.end()));
    add_rule(rules, std::move(lhs), std::move(rhs));
    // exactly half: orient toward the shortlex-smaller side
    Word u(w.begin(), w.begin() + 4);
    Word vbar = alpha.invert(Word(w.begin() + 4, w.end()));
    if (shortlex_less(vbar, u)) add_rule(rules, std::move(u), std::move(vbar));
  }
  GroupPresentation p(std::move(alpha), std::move(rules), false,
                      BuiltinTag{BuiltinKind::SurfaceGenus2, 0, {}, {}});
  p.mode_ = NfMode::ReducedOnly;
  p.exact_identity_ = true;
  return p;
}

// The graph groups canonicalize by sorting, not by rewriting: their naive
// swap systems have no finite confluent completion in general (a path graph
// already forces an infinite rule family).  The stored rules are sound raw
// identities kept for inspection and serialization.
namespace {

struct GraphParts {
  Alphabet alpha;
  std::vector<Rule> rules;
  std::vector<char> commute;
};

GraphParts graph_parts(BuiltinKind kind, const std::vector<std::string>& vertices,
                       const std::vector<std::pair<int, int>>& edges) {
  check_graph(vertices, edges);
  std::size_t per = kind == BuiltinKind::RightAngledCoxeter ? 1 : 2;
  Alphabet alpha = per == 1 ? Alphabet(vertices, [&] {
    std::vector<Letter> inv(vertices.size());
    for (std::size_t i = 0; i < inv.size(); ++i) inv[i] = static_cast<Letter>(i);
    return inv;
  }()) : paired_alphabet(vertices);
  std::vector<Rule> rules;
  if (per == 1)
    for (Letter l = 0; l < alpha.size(); ++l) add_rule(rules, Word{l, l}, Word{});
  else
    rules = cancellation_rules(alpha.size());
  std::vector<char> commute(alpha.size() * alpha.size(), 0);
  for (auto [u, v] : edges) {
    auto [lo, hi] = std::minmax(u, v);
    for (std::size_t s = 0; s < per; ++s)
      for (std::size_t t = 0; t < per; ++t) {
        Letter a = static_cast<Letter>(per * hi + s);
        Letter b = static_cast<Letter>(per * lo + t);
        add_rule(rules, Word{a, b}, Word{b, a});
        commute[a * alpha.size() + b] = 1;
        commute[b * alpha.size() + a] = 1;
      }
  }
  return {std::move(alpha), std::move(rules), std::move(commute)};
}

} // namespace

GroupPresentation GroupPresentation::right_angled_coxeter(
    const std::vector<std::string>& vertices,
    const std::vector<std::pair<int, int>>& edges) {
  GraphParts parts = graph_parts(BuiltinKind::RightAngledCoxeter, vertices, edges);
  GroupPresentation p(std::move(parts.alpha), std::move(parts.rules), false,
                      BuiltinTag{BuiltinKind::RightAngledCoxeter, 0, vertices, edges});
  p.mode_ = NfMode::GraphSort;
  p.exact_identity_ = true;
  p.commute_ = std::move(parts.commute);
  return p;
}

GroupPresentation GroupPresentation::right_angled_artin(
    const std::vector<std::string>& vertices,
    const std::vector<std::pair<int, int>>& edges) {
  GraphParts parts = graph_parts(BuiltinKind::RightAngledArtin, vertices, edges);
  GroupPresentation p(std::move(parts.alpha), std::move(parts.rules), false,
                      BuiltinTag{BuiltinKind::RightAngledArtin, 0, vertices, edges});
  p.mode_ = NfMode::GraphSort;
  p.exact_identity_ = true;
  p.commute_ = std::move(parts.commute);
  return p;
}

GroupPresentation GroupPresentation::from_builtin(const BuiltinTag& tag) {
  switch (tag.kind) {
    case BuiltinKind::FreeGroup: return free_group(tag.rank);
    case BuiltinKind::FreeAbelian: return free_abelian(tag.rank);
    case BuiltinKind::SurfaceGenus2: return surface_genus2();
    case BuiltinKind::RightAngledCoxeter:
      return right_angled_coxeter(tag.vertices, tag.edges);
    case BuiltinKind::RightAngledArtin:
      return right_angled_artin(tag.vertices, tag.edges);
  }
  fail(ErrorKind::MalformedInput, "builtin", "unknown builtin kind");
}

} // namespace cubulate
