#pragma once

#include "cubulate/config.hpp"
#include "cubulate/words.hpp"

#include <optional>
#include <string>
#include <vector>

namespace cubulate {

struct Rule {
  Word lhs;
  Word rhs;
  bool operator==(const Rule& other) const = default;
};

enum class BuiltinKind {
  FreeGroup,
  FreeAbelian,
  SurfaceGenus2,
  RightAngledCoxeter,
  RightAngledArtin
};

struct BuiltinTag {
  BuiltinKind kind;
  int rank = 0;                          // FreeGroup / FreeAbelian
  std::vector<std::string> vertices;     // graph builtins
  std::vector<std::pair<int, int>> edges;
  bool operator==(const BuiltinTag& other) const = default;
  std::string to_string() const;
};

struct CriticalPairFailure {
  Word overlap;   // word admitting two one-step reductions
  Word left_nf;
  Word right_nf;
};

// How normal_form canonicalizes.
//
//   Rewrite       confluent shortlex rewriting; normal forms are canonical.
//   GraphSort     commuting-letter groups: cancel across commuting gaps until
//                 the word is fully reduced, then take the lexicographically
//                 least shuffle.  Canonical, no rewriting-system completion
//                 needed (naive swap systems do not close finitely).
//   ReducedOnly   rewriting to an irreducible word that is not canonical per
//                 element.  Identity testing can still be exact (small
//                 cancellation lets greedy reduction decide triviality); ball
//                 construction then merges equal vertices explicitly.
enum class NfMode { Rewrite, GraphSort, ReducedOnly };

// A group modeled as a string rewriting system over a finite alphabet with a
// formal-inverse involution.  Rules must strictly decrease shortlex order, so
// rewriting always terminates; confluence is verified at construction for the
// builtin families that rely on it and merely recorded for user systems.
class GroupPresentation {
public:
  GroupPresentation(Alphabet alphabet, std::vector<Rule> rules,
                    bool confluence_declared,
                    std::optional<BuiltinTag> builtin = std::nullopt);

  const Alphabet& alphabet() const { return alphabet_; }
  const std::vector<Rule>& rules() const { return rules_; }
  bool confluence_declared() const { return confluence_declared_; }
  const std::optional<BuiltinTag>& builtin() const { return builtin_; }
  bool infinite_growth() const;

  NfMode nf_mode() const { return mode_; }
  // normal_form(g) == normal_form(h) iff g = h in the group
  bool canonical_normal_forms() const { return mode_ != NfMode::ReducedOnly; }
  // is_identity is a complete triviality test
  bool exact_identity() const { return exact_identity_; }
  bool letters_commute(Letter a, Letter b) const;

  // Canonical form under Rewrite / GraphSort modes, otherwise an irreducible
  // descendant.  Throws Divergence when more than `budget` replacements are
  // needed.
  Word normal_form(const Word& w, std::size_t budget = Budgets{}.rewrite_steps) const;
  Word normal_form(const std::string& text) const;

  Word multiply(const Word& g, const Word& h) const;
  Word inverse(const Word& g) const;
  bool is_identity(const Word& g) const { return normal_form(g).empty(); }

  // Local confluence check: every critical pair of rule overlaps must resolve
  // to a common normal form.  Returns the failures found (empty = locally
  // confluent, hence confluent by termination).
  std::vector<CriticalPairFailure> check_local_confluence(
      std::size_t max_failures = 16) const;

  // Builtin factories.  Free and free-abelian systems are verified locally
  // confluent at construction; graph groups canonicalize by sorting; the
  // surface group ships small-cancellation rules with an exact identity test.
  static GroupPresentation free_group(int rank);
  static GroupPresentation free_abelian(int rank);
  static GroupPresentation surface_genus2();
  static GroupPresentation right_angled_coxeter(
      const std::vector<std::string>& vertices,
      const std::vector<std::pair<int, int>>& edges);
  static GroupPresentation right_angled_artin(
      const std::vector<std::string>& vertices,
      const std::vector<std::pair<int, int>>& edges);
  static GroupPresentation from_builtin(const BuiltinTag& tag);

  bool operator==(const GroupPresentation& other) const;

private:
  void check_termination() const;
  Word rewrite(const Word& w, std::size_t budget) const;
  Word graph_sort(const Word& w) const;

  Alphabet alphabet_;
  std::vector<Rule> rules_;
  bool confluence_declared_ = false;
  std::optional<BuiltinTag> builtin_;
  std::size_t max_lhs_ = 0;
  NfMode mode_ = NfMode::Rewrite;
  bool exact_identity_ = true;
  std::vector<char> commute_;  // letter pair table, GraphSort only
};

} // namespace cubulate
