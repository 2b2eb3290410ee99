#include <doctest.h>

#include "cubulate/cayley_ball.hpp"
#include "cubulate/rewriting.hpp"
#include "test_util.hpp"

#include <random>
#include <set>

using namespace cubulate;
using test_util::error_kind;

namespace {

std::vector<GroupPresentation> builtin_samples() {
  std::vector<GroupPresentation> out;
  out.push_back(GroupPresentation::free_group(2));
  out.push_back(GroupPresentation::free_abelian(2));
  out.push_back(GroupPresentation::surface_genus2());
  out.push_back(
      GroupPresentation::right_angled_artin({"a", "b", "c"}, {{0, 1}, {1, 2}}));
  out.push_back(
      GroupPresentation::right_angled_coxeter({"s", "u", "r"}, {{0, 1}}));
  return out;
}

} // namespace

TEST_CASE("normal form is idempotent on random words") {
  for (const GroupPresentation& g : builtin_samples()) {
    std::mt19937 rng(7);
    for (int i = 0; i < 1000; ++i) {
      Word w = test_util::random_word(rng, g.alphabet().size(), 12);
      Word nf = g.normal_form(w);
      CHECK(g.normal_form(nf) == nf);
    }
  }
}

TEST_CASE("graph groups cancel across commuting gaps and sort") {
  GroupPresentation raag =
      GroupPresentation::right_angled_artin({"a", "b", "c"}, {{0, 1}, {1, 2}});
  const Alphabet& al = raag.alphabet();
  CHECK(raag.normal_form(al.parse_word("ba")) == al.parse_word("ab"));
  CHECK(raag.normal_form(al.parse_word("ca")) == al.parse_word("ca"));
  CHECK(raag.normal_form(al.parse_word("aA")).empty());
  CHECK(raag.normal_form(al.parse_word("bAaB")).empty());
  CHECK(raag.normal_form(al.parse_word("aCbc")) == al.parse_word("ab"));

  GroupPresentation racg =
      GroupPresentation::right_angled_coxeter({"s", "u"}, {{0, 1}});
  const Alphabet& cl = racg.alphabet();
  CHECK(racg.normal_form(cl.parse_word("ss")).empty());
  CHECK(racg.normal_form(cl.parse_word("us")) == cl.parse_word("su"));
}

TEST_CASE("alphabets reject mixed involutions") {
  CHECK(error_kind([] {
          Alphabet({"t", "T", "s"}, {1, 0, 2});
        }) == ErrorKind::MalformedInput);
  CHECK_FALSE(error_kind([] { Alphabet({"t", "T"}, {1, 0}); }));
  CHECK_FALSE(error_kind([] { Alphabet({"s", "u"}, {0, 1}); }));
}

TEST_CASE("rules must strictly decrease shortlex order") {
  Alphabet al({"s", "u"}, {0, 1});
  CHECK(error_kind([&] {
          GroupPresentation(al, {Rule{al.parse_word("s"), al.parse_word("u")}},
                            true);
        }) == ErrorKind::MalformedInput);
  CHECK(error_kind([&] {
          GroupPresentation(al, {Rule{al.parse_word("su"), al.parse_word("su")}},
                            true);
        }) == ErrorKind::MalformedInput);
  CHECK_FALSE(error_kind([&] {
    GroupPresentation(al, {Rule{al.parse_word("u"), al.parse_word("s")}}, true);
  }));
}

TEST_CASE("local confluence failures carry witnesses") {
  Alphabet al({"a", "b"}, {0, 1});
  GroupPresentation g(
      al,
      {Rule{al.parse_word("aa"), {}}, Rule{al.parse_word("bb"), {}},
       Rule{al.parse_word("ab"), al.parse_word("a")}},
      false);
  std::vector<CriticalPairFailure> failures = g.check_local_confluence();
  REQUIRE(!failures.empty());
  CHECK(failures[0].left_nf != failures[0].right_nf);

  GroupPresentation dihedral(
      al, {Rule{al.parse_word("aa"), {}}, Rule{al.parse_word("bb"), {}}}, true);
  CHECK(dihedral.check_local_confluence().empty());
}

TEST_CASE("ball vertices are stable under radius growth") {
  for (const GroupPresentation& g : builtin_samples()) {
    CayleyBall small(g, 2);
    CayleyBall big(g, 3);
    REQUIRE(big.count_within(2) == small.size());
    for (std::uint32_t v = 0; v < small.size(); ++v) {
      CHECK(big.word(v) == small.word(v));
      CHECK(big.distance(v) == small.distance(v));
    }
  }
}

TEST_CASE("left multiplication embeds smaller balls preserving edges") {
  std::vector<GroupPresentation> groups;
  groups.push_back(GroupPresentation::free_abelian(2));
  groups.push_back(GroupPresentation::free_group(2));
  for (const GroupPresentation& g : groups) {
    CayleyBall small(g, 3);
    CayleyBall big(g, 5);
    Word t = g.alphabet().parse_word("ab");
    std::vector<std::uint32_t> image(small.size());
    std::set<std::uint32_t> hit;
    for (std::uint32_t v = 0; v < small.size(); ++v) {
      auto u = big.locate(g.multiply(t, small.word(v)));
      REQUIRE(u.has_value());
      image[v] = *u;
      hit.insert(*u);
    }
    CHECK(hit.size() == small.size());
    const std::size_t nl = g.alphabet().size();
    for (std::uint32_t v = 0; v < small.size(); ++v)
      for (Letter l = 0; l < nl; ++l) {
        std::uint32_t w = small.step(v, l);
        if (w == CayleyBall::npos) continue;
        CHECK(big.step(image[v], l) == image[w]);
      }
  }
}

TEST_CASE("surface ball census is frozen") {
  CayleyBall ball(GroupPresentation::surface_genus2(), 3);
  CHECK(ball.size() == 457);
  CHECK(ball.count_within(1) == 9);
}

TEST_CASE("rewriting budget failures are divergence errors") {
  GroupPresentation f2 = GroupPresentation::free_group(2);
  Word w = f2.alphabet().parse_word("aAaAaAaAaA");
  CHECK(error_kind([&] { f2.normal_form(w, 2); }) == ErrorKind::Divergence);
  CHECK(f2.normal_form(w).empty());
}

TEST_CASE("ball vertex budget is enforced") {
  Budgets b;
  b.ball_vertices = 10;
  CHECK(error_kind([&] {
          CayleyBall ball(GroupPresentation::free_group(2), 3, b);
        }) == ErrorKind::Size);
}

TEST_CASE("budget environment overrides are strict") {
  setenv("CUBULATE_BUDGET_WALLS", "32", 1);
  CHECK(budgets_from_env().walls == 32);
  setenv("CUBULATE_BUDGET_WALLS", "many", 1);
  CHECK(error_kind([] { budgets_from_env(); }) == ErrorKind::MalformedInput);
  unsetenv("CUBULATE_BUDGET_WALLS");
  CHECK(budgets_from_env().walls == Budgets{}.walls);
}
