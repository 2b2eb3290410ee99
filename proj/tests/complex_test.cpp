#include <doctest.h>

#include "cubulate/cube_complex.hpp"
#include "cubulate/dual_complex.hpp"
#include "cubulate/errors.hpp"
#include "cubulate/fixtures.hpp"
#include "cubulate/hyperplane.hpp"
#include "cubulate/wallspace.hpp"

#include "test_util.hpp"

#include <algorithm>
#include <numeric>
#include <set>
#include <vector>

using namespace cubulate;

namespace {

CubeComplex grid_complex() {
  WallspaceBundle grid = fixtures::grid_cuts();
  return from_dual(build_dual(grid.space));
}

std::vector<std::set<std::uint32_t>> edge_classes(const CubeComplex& cc) {
  std::vector<std::set<std::uint32_t>> out;
  for (const Hyperplane& h : hyperplanes(cc))
    out.emplace_back(h.dual_edges.begin(), h.dual_edges.end());
  return out;
}

} // namespace

TEST_CASE("fixture complexes validate and report their dimensions") {
  CubeComplex torus = fixtures::torus();
  validate(torus);
  CHECK(torus.vertex_count == 1);
  CHECK(torus.edges.size() == 2);
  CHECK(torus.dimension() == 2);

  CubeComplex wedge = fixtures::wedge();
  validate(wedge);
  CHECK(wedge.dimension() == 1);

  CubeComplex cube = fixtures::solid_cube();
  validate(cube);
  CHECK(cube.vertex_count == 8);
  CHECK(cube.edges.size() == 12);
  CHECK(cube.squares.size() == 6);
  CHECK(cube.dimension() == 3);
  CHECK(cube.cube_count(3) == 1);

  validate(fixtures::three_squares());
  validate(fixtures::one_loop_square());

  CubeComplex grid = grid_complex();
  validate(grid);
  CHECK(grid.vertex_count == 25);
  CHECK(grid.edges.size() == 40);
  CHECK(grid.squares.size() == 16);
  CHECK(grid.dimension() == 2);
}

TEST_CASE("structural validation rejects corrupted complexes") {
  CubeComplex bad_vertex = fixtures::torus();
  bad_vertex.edges[0].v[1] = 5;
  CHECK(test_util::error_kind([&] { validate(bad_vertex); }) ==
        ErrorKind::Structural);

  CubeComplex bad_edge = fixtures::torus();
  bad_edge.squares[0].edge[2] = 7;
  CHECK(test_util::error_kind([&] { validate(bad_edge); }) ==
        ErrorKind::Structural);

  CubeComplex open_square = grid_complex();
  open_square.squares[0].flip[0] = !open_square.squares[0].flip[0];
  CHECK(test_util::error_kind([&] { validate(open_square); }) ==
        ErrorKind::Structural);

  CubeComplex bad_corner = fixtures::solid_cube();
  bad_corner.big_cubes[0].corners[0] = bad_corner.big_cubes[0].corners[1];
  CHECK(test_util::error_kind([&] { validate(bad_corner); }) ==
        ErrorKind::Structural);
}

TEST_CASE("vertex links certify nonpositive curvature") {
  NpcReport torus = check_npc(fixtures::torus());
  CHECK(torus.npc);
  CHECK(torus.simplicial);
  CHECK(torus.flag);

  NpcReport wedge = check_npc(fixtures::wedge());
  CHECK(wedge.npc);

  NpcReport cube = check_npc(fixtures::solid_cube());
  CHECK(cube.npc);

  NpcReport grid = check_npc(grid_complex());
  CHECK(grid.npc);

  NpcReport hollow = check_npc(fixtures::three_squares());
  CHECK_FALSE(hollow.npc);
  CHECK(hollow.simplicial);
  CHECK_FALSE(hollow.flag);
  CHECK(hollow.detail.find("empty") != std::string::npos);
}

TEST_CASE("specialness separates the clean fixtures from the pathological ones") {
  PathologyReport torus = check_special(fixtures::torus());
  CHECK(torus.special);
  CHECK(torus.findings.empty());
  REQUIRE(torus.details.size() == 2);
  for (const Hyperplane& h : torus.details) {
    CHECK(h.embedded);
    CHECK(h.two_sided);
    CHECK_FALSE(h.self_osculating);
  }

  PathologyReport wedge = check_special(fixtures::wedge());
  CHECK(wedge.special);
  CHECK(wedge.details.size() == 2);

  PathologyReport cube = check_special(fixtures::solid_cube());
  CHECK(cube.special);
  REQUIRE(cube.details.size() == 3);
  for (const Hyperplane& h : cube.details) {
    CHECK(h.dual_edges.size() == 4);
    CHECK(h.cube_midcubes.size() == 1);
  }

  PathologyReport loop = check_special(fixtures::one_loop_square());
  CHECK_FALSE(loop.special);
  REQUIRE(loop.details.size() == 1);
  CHECK_FALSE(loop.details[0].embedded);
  CHECK(loop.details[0].self_crossing_square == 0);
  REQUIRE_FALSE(loop.findings.empty());
  CHECK(loop.findings[0].find("self-crosses") != std::string::npos);
}

TEST_CASE("a pinched square self-osculates and inter-osculates") {
  CubeComplex cc;
  cc.vertex_count = 3;
  cc.edges = {{{0, 1}}, {{1, 2}}, {{2, 0}}, {{0, 0}}};
  cc.squares.push_back({{0, 1, 2, 3}, {false, false, false, false}});
  validate(cc);

  PathologyReport report = check_special(cc);
  REQUIRE(report.details.size() == 2);
  const Hyperplane& around = report.details[0];
  const Hyperplane& across = report.details[1];
  CHECK(around.dual_edges == std::vector<std::uint32_t>{0, 2});
  CHECK(across.dual_edges == std::vector<std::uint32_t>{1, 3});
  CHECK(around.embedded);
  CHECK(around.two_sided);
  CHECK(across.two_sided);

  CHECK(around.self_osculating);
  CHECK(around.osculation_vertex == 0);
  CHECK(around.osculation_edges[0] == 0);
  CHECK(around.osculation_edges[1] == 2);

  REQUIRE(around.inter_osculations.size() == 1);
  CHECK(around.inter_osculations[0].partner == 1);
  CHECK(around.inter_osculations[0].crossing_square == 0);
  CHECK(around.inter_osculations[0].vertex == 0);

  CHECK_FALSE(report.special);
  CHECK(report.findings.size() == 2);
}

TEST_CASE("hyperplanes biject with the walls of a dual complex") {
  WallspaceBundle grid = fixtures::grid_cuts();
  DualComplex dual = build_dual(grid.space);
  CubeComplex cc = from_dual(dual);
  REQUIRE(cc.edges.size() == dual.edges.size());

  std::vector<Hyperplane> hps = hyperplanes(cc);
  REQUIRE(hps.size() == grid.space.walls.size());

  std::set<std::uint32_t> walls_seen;
  for (const Hyperplane& h : hps) {
    std::set<std::uint32_t> labels;
    for (std::uint32_t e : h.dual_edges) labels.insert(dual.edges[e].wall);
    REQUIRE(labels.size() == 1);
    walls_seen.insert(*labels.begin());
  }
  CHECK(walls_seen.size() == hps.size());
}

TEST_CASE("dual edges of the hyperplanes partition the edge set") {
  std::vector<CubeComplex> complexes;
  complexes.push_back(fixtures::torus());
  complexes.push_back(fixtures::three_squares());
  complexes.push_back(fixtures::one_loop_square());
  complexes.push_back(fixtures::wedge());
  complexes.push_back(fixtures::solid_cube());
  complexes.push_back(grid_complex());

  for (const CubeComplex& cc : complexes) {
    std::vector<std::uint32_t> covered;
    for (const Hyperplane& h : hyperplanes(cc))
      covered.insert(covered.end(), h.dual_edges.begin(), h.dual_edges.end());
    std::sort(covered.begin(), covered.end());
    std::vector<std::uint32_t> all(cc.edges.size());
    std::iota(all.begin(), all.end(), 0u);
    CHECK(covered == all);
  }
}

TEST_CASE("deleting a square refines the hyperplane partition") {
  CubeComplex whole = grid_complex();
  std::vector<std::set<std::uint32_t>> coarse = edge_classes(whole);

  CubeComplex cut = whole;
  cut.squares.erase(cut.squares.begin() + 5);
  validate(cut);
  std::vector<std::set<std::uint32_t>> fine = edge_classes(cut);

  CHECK(fine.size() >= coarse.size());
  for (const std::set<std::uint32_t>& part : fine) {
    bool contained = false;
    for (const std::set<std::uint32_t>& big : coarse)
      if (std::includes(big.begin(), big.end(), part.begin(), part.end()))
        contained = true;
    CHECK(contained);
  }
}

TEST_CASE("the one-skeleton drops loops and collapses multi-edges") {
  CubeComplex torus = fixtures::torus();
  std::vector<std::vector<std::uint32_t>> adj = torus.adjacency();
  REQUIRE(adj.size() == 1);
  CHECK(adj[0].empty());

  CubeComplex grid = grid_complex();
  std::vector<std::vector<std::uint32_t>> gadj = grid.adjacency();
  std::size_t degree_sum = 0;
  for (const std::vector<std::uint32_t>& row : gadj) degree_sum += row.size();
  CHECK(degree_sum == 2 * grid.edges.size());
}
