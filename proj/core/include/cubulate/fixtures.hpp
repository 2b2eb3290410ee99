#pragma once

#include "cubulate/criteria.hpp"
#include "cubulate/cube_complex.hpp"
#include "cubulate/io.hpp"

#include <memory>
#include <string>
#include <vector>

namespace cubulate::fixtures {

// Hand-built cube complexes.
CubeComplex torus();             // one vertex, two loops, one square; special
CubeComplex three_squares();     // empty triangle in the central link
CubeComplex one_loop_square();   // all four sides one loop; self-crossing
CubeComplex wedge();             // two loops, no squares
CubeComplex solid_cube();        // full 3-cube with all faces

// Left halfspace {axis coordinate <= k} over a rank-2 free-abelian ball.
Wall coordinate_cut(const CayleyBall& ball, int axis, int k);

// Wall systems over concrete balls.
WallspaceBundle line_edges(int radius = 7, int margin = 2);
WallspaceBundle grid_cuts();            // radius 4, eight coordinate cuts
WallspaceBundle grid_vertical_only();   // radius 4, the four vertical cuts
WallspaceBundle tree_edges(int radius = 3, int margin = 0);
WallspaceBundle line_axis();            // radius 6, one edge wall at 1|a
WallspaceBundle grid_axis();            // walls y<=0 (a-invariant), x<=0
WallspaceBundle tree_axis();            // radius 8, margin 4, edge wall 1|a

struct SelectionFixture {
  std::unique_ptr<CayleyBall> ball;
  int margin = 0;
  int translate_bound = 0;
  std::vector<WallFamily> families;
};
SelectionFixture grid_selection();      // radius 16, margin 9, two cut families

struct InduceFixture {
  WallspaceBundle ambient;     // grid walls: vertical and horizontal cosets
  std::unique_ptr<CayleyBall> sub;
  std::vector<Word> letter_images;
  int sub_margin = 1;
};
InduceFixture line_in_grid();

// Cuts the first edge joining two maximum-degree vertices; turns a grid into
// a non-median graph.
std::vector<std::vector<std::uint32_t>> delete_interior_edge(
    std::vector<std::vector<std::uint32_t>> adjacency);

struct FixtureFile {
  std::string name;
  std::string text;
};
// Shipped spec files: groups, wall specs, cube complexes.
std::vector<FixtureFile> files();

} // namespace cubulate::fixtures
