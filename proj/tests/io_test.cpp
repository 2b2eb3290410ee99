#include <doctest.h>

#include "cubulate/cayley_ball.hpp"
#include "cubulate/criteria.hpp"
#include "cubulate/cube_complex.hpp"
#include "cubulate/dual_complex.hpp"
#include "cubulate/errors.hpp"
#include "cubulate/fixtures.hpp"
#include "cubulate/io.hpp"
#include "cubulate/rewriting.hpp"
#include "cubulate/structured_text.hpp"

#include "test_util.hpp"

#include <json.hpp>

#include <map>
#include <string>
#include <vector>

using namespace cubulate;

TEST_CASE("group specs round-trip through text") {
  std::vector<GroupPresentation> groups;
  groups.push_back(GroupPresentation::free_group(2));
  groups.push_back(GroupPresentation::free_abelian(2));
  groups.push_back(GroupPresentation::surface_genus2());
  groups.push_back(GroupPresentation::right_angled_artin({"a", "b", "c"},
                                                         {{0, 1}, {1, 2}}));
  groups.push_back(GroupPresentation::right_angled_coxeter({"s", "u"}, {{0, 1}}));
  for (const GroupPresentation& g : groups)
    CHECK(group_from_text(group_to_text(g)) == g);

  std::string dihedral =
      "version = 1\n"
      "confluent = true\n"
      "[generators]\n"
      "letters = s, u\n"
      "[rules]\n"
      "rule = ss -> 1\n"
      "rule = uu -> 1\n";
  GroupPresentation g = group_from_text(dihedral);
  CHECK(g.alphabet().size() == 2);
  CHECK(g.alphabet().inverse(0) == 0);
  CHECK(g.alphabet().print_word(g.normal_form("ssu")) == "u");
  CHECK(group_from_text(group_to_text(g)) == g);
}

TEST_CASE("json artifacts rebuild their objects and dump identically") {
  CayleyBall ball(GroupPresentation::free_abelian(2), 4);
  std::string ball_text = ball_to_json(ball);
  CayleyBall reloaded = ball_from_json(ball_text);
  CHECK(reloaded.size() == ball.size());
  CHECK(reloaded.radius() == ball.radius());
  CHECK(ball_to_json(reloaded) == ball_text);

  WallspaceBundle grid = fixtures::grid_cuts();
  std::string walls_text = walls_to_json(grid.space);
  WallspaceBundle bundle = walls_from_json(walls_text);
  REQUIRE(bundle.space.walls.size() == grid.space.walls.size());
  CHECK(bundle.space.margin == grid.space.margin);
  for (std::size_t i = 0; i < bundle.space.walls.size(); ++i) {
    CHECK(bundle.space.walls[i].same_partition(grid.space.walls[i]));
    CHECK(bundle.space.walls[i].label == grid.space.walls[i].label);
  }
  CHECK(walls_to_json(bundle.space) == walls_text);

  DualComplex dual = build_dual(grid.space);
  std::string dual_text = dual_to_json(dual);
  CHECK(dual_from_json(dual_text) == dual);
  CHECK(dual_to_json(dual_from_json(dual_text)) == dual_text);

  WallspaceBundle line = fixtures::line_edges();
  SeparationProfile profile = linear_separation_profile(line.space, 5);
  std::string profile_text = profile_to_json(profile);
  CHECK(profile_from_json(profile_text) == profile);
  CHECK(profile_to_json(profile_from_json(profile_text)) == profile_text);
}

TEST_CASE("cube complex text survives a round trip") {
  std::vector<CubeComplex> complexes;
  complexes.push_back(fixtures::torus());
  complexes.push_back(fixtures::three_squares());
  complexes.push_back(fixtures::one_loop_square());
  complexes.push_back(fixtures::wedge());
  complexes.push_back(fixtures::solid_cube());
  for (const CubeComplex& cc : complexes) {
    std::string text = complex_to_text(cc);
    CHECK(complex_from_text(text) == cc);
    CHECK(complex_to_text(complex_from_text(text)) == text);
  }
}

TEST_CASE("loaders reject tampered artifacts") {
  CHECK(test_util::error_kind([] { ball_from_json("{nope"); }) ==
        ErrorKind::MalformedInput);

  CayleyBall ball(GroupPresentation::free_abelian(1), 3);
  std::string text = ball_to_json(ball);

  CHECK(test_util::error_kind([&] { dual_from_json(text); }) ==
        ErrorKind::MalformedInput);

  nlohmann::json stale = nlohmann::json::parse(text);
  stale["version"] = 2;
  CHECK(test_util::error_kind([&] { ball_from_json(stale.dump()); }) ==
        ErrorKind::MalformedInput);

  nlohmann::json lying = nlohmann::json::parse(text);
  lying["vertices"][1] = "A";
  lying["vertices"][2] = "a";
  CHECK(test_util::error_kind([&] { ball_from_json(lying.dump()); }) ==
        ErrorKind::MalformedInput);

  std::string bad_cube =
      "version = 1\n"
      "vertices = 8\n"
      "[edges]\n"
      "e = 0 1\n"
      "[cubes]\n"
      "c = 0 1 2\n";
  CHECK(test_util::error_kind([&] { complex_from_text(bad_cube); }) ==
        ErrorKind::MalformedInput);
}

TEST_CASE("key-value specs pin down structural mistakes") {
  CHECK(test_util::error_kind([] { parse_kv("margin 2\n", "spec"); }) ==
        ErrorKind::MalformedInput);

  CHECK(test_util::error_kind([] {
          group_from_text("[builtin]\nkind = dodecahedral\n");
        }) == ErrorKind::MalformedInput);

  CHECK(test_util::error_kind([] {
          group_from_text("version = 2\n[builtin]\nkind = free\nrank = 1\n");
        }) == ErrorKind::MalformedInput);

  CayleyBall ball(GroupPresentation::free_abelian(1), 3);
  CHECK(test_util::error_kind([&] {
          walls_from_spec("[portals]\nenabled = true\n", ball);
        }) == ErrorKind::MalformedInput);
  CHECK(test_util::error_kind([&] {
          walls_from_spec("speed = 9\n[edges]\nenabled = true\n", ball);
        }) == ErrorKind::MalformedInput);
}

TEST_CASE("scalar and list parsing accept both spellings") {
  CHECK(split_list("a, b, c") == std::vector<std::string>{"a", "b", "c"});
  CHECK(split_list("a b c") == std::vector<std::string>{"a", "b", "c"});
  CHECK(split_list("").empty());

  CHECK(parse_int("17", "spec") == 17);
  CHECK(test_util::error_kind([] { parse_int("seventeen", "spec"); }) ==
        ErrorKind::MalformedInput);

  CHECK(parse_bool("true", "spec"));
  CHECK(parse_bool("yes", "spec"));
  CHECK(parse_bool("1", "spec"));
  CHECK_FALSE(parse_bool("false", "spec"));
  CHECK_FALSE(parse_bool("no", "spec"));
  CHECK_FALSE(parse_bool("0", "spec"));
  CHECK(test_util::error_kind([] { parse_bool("maybe", "spec"); }) ==
        ErrorKind::MalformedInput);
}

TEST_CASE("dot export draws the one-skeleton with wall tooltips") {
  WallspaceBundle grid = fixtures::grid_cuts();
  std::string dot = dual_to_dot(build_dual(grid.space));
  CHECK(dot.find("graph dual {") != std::string::npos);
  CHECK(dot.find("tooltip") != std::string::npos);
}

TEST_CASE("shipped fixture files parse with their partner loaders") {
  std::map<std::string, CubeComplex> complexes;
  complexes["torus.cc"] = fixtures::torus();
  complexes["three-squares.cc"] = fixtures::three_squares();
  complexes["one-loop-square.cc"] = fixtures::one_loop_square();
  complexes["wedge.cc"] = fixtures::wedge();
  complexes["solid-cube.cc"] = fixtures::solid_cube();

  std::size_t handled = 0;
  for (const fixtures::FixtureFile& f : fixtures::files()) {
    if (f.name.ends_with(".group")) {
      GroupPresentation g = group_from_text(f.text);
      CHECK(group_from_text(group_to_text(g)) == g);
      ++handled;
    } else if (f.name == "line-edges.walls") {
      CayleyBall ball(GroupPresentation::free_abelian(1), 7);
      WallsSpecResult r = walls_from_spec(f.text, ball);
      CHECK(r.margin == 2);
      CHECK(r.walls.size() == 14);
      ++handled;
    } else if (f.name == "grid-cuts.walls" || f.name == "grid-vertical.walls") {
      CayleyBall ball(GroupPresentation::free_abelian(2), 4);
      WallsSpecResult r = walls_from_spec(f.text, ball);
      CHECK(r.walls.size() == (f.name == "grid-cuts.walls" ? 8 : 4));
      ++handled;
    } else if (f.name == "grid-families.walls") {
      fixtures::SelectionFixture sel = fixtures::grid_selection();
      std::vector<WallFamily> fams =
          families_from_spec(f.text, *sel.ball, sel.margin);
      REQUIRE(fams.size() == 2);
      CHECK(fams[0].base.same_partition(sel.families[0].base));
      CHECK(fams[1].base.same_partition(sel.families[1].base));
      ++handled;
    } else if (f.name.ends_with(".cc")) {
      REQUIRE(complexes.count(f.name) == 1);
      CHECK(complex_from_text(f.text) == complexes[f.name]);
      ++handled;
    }
  }
  CHECK(handled == fixtures::files().size());
}

TEST_CASE("wall specs settle margins and carrier radii") {
  CayleyBall line(GroupPresentation::free_abelian(1), 7);
  std::string spec = "version = 1\nmargin = 2\n\n[edges]\nenabled = true\n";

  CHECK(walls_from_spec(spec, line).margin == 2);
  CHECK(walls_from_spec(spec, line, 3).margin == 3);
  CHECK(test_util::error_kind([&] { walls_from_spec(spec, line, 99); }) ==
        ErrorKind::MalformedInput);

  CayleyBall grid(GroupPresentation::free_abelian(2), 6);
  WallsSpecResult r = walls_from_spec(
      "version = 1\nmargin = 1\n\n[family]\ngenerators = b\n", grid);
  REQUIRE(r.walls.size() == 1);
  REQUIRE(r.notes.size() == 1);
  CHECK(r.notes[0].find("carrier radius 0 chosen automatically") !=
        std::string::npos);
}
