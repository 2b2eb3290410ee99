#include "cubulate/fixtures.hpp"

#include "cubulate/errors.hpp"
#include "cubulate/structured_text.hpp"

#include <sstream>
#include <utility>

namespace cubulate::fixtures {

namespace {

std::uint32_t add_edge(CubeComplex& cc, std::uint32_t a, std::uint32_t b) {
  cc.edges.push_back(CubeComplex::EdgeC{{a, b}});
  return static_cast<std::uint32_t>(cc.edges.size() - 1);
}

int coordinate(const Word& w, Letter pos, Letter neg) {
  int c = 0;
  for (Letter l : w) c += (l == pos) - (l == neg);
  return c;
}

WallspaceBundle bundle(GroupPresentation group, int radius, int margin) {
  WallspaceBundle b;
  b.ball = std::make_unique<CayleyBall>(std::move(group), radius);
  b.space.ball = b.ball.get();
  b.space.margin = margin;
  return b;
}

} // namespace

CubeComplex torus() {
  CubeComplex cc;
  cc.vertex_count = 1;
  add_edge(cc, 0, 0);
  add_edge(cc, 0, 0);
  CubeComplex::Square s;
  s.edge[0] = 0; s.flip[0] = false;
  s.edge[1] = 1; s.flip[1] = false;
  s.edge[2] = 0; s.flip[2] = true;
  s.edge[3] = 1; s.flip[3] = true;
  cc.squares.push_back(s);
  return cc;
}

CubeComplex three_squares() {
  CubeComplex cc;
  cc.vertex_count = 7;  // center 0, axis tips 1 2 3, outer corners 4 5 6
  std::uint32_t e1 = add_edge(cc, 0, 1), e2 = add_edge(cc, 0, 2),
                e3 = add_edge(cc, 0, 3);
  std::uint32_t pairs[3][2] = {{e1, e2}, {e2, e3}, {e3, e1}};
  std::uint32_t tips[3][2] = {{1, 2}, {2, 3}, {3, 1}};
  for (int i = 0; i < 3; ++i) {
    std::uint32_t corner = 4 + static_cast<std::uint32_t>(i);
    std::uint32_t up = add_edge(cc, tips[i][0], corner);
    std::uint32_t back = add_edge(cc, corner, tips[i][1]);
    CubeComplex::Square s;
    s.edge[0] = pairs[i][0]; s.flip[0] = false;
    s.edge[1] = up;          s.flip[1] = false;
    s.edge[2] = back;        s.flip[2] = false;
    s.edge[3] = pairs[i][1]; s.flip[3] = true;
    cc.squares.push_back(s);
  }
  return cc;
}

CubeComplex one_loop_square() {
  CubeComplex cc;
  cc.vertex_count = 1;
  add_edge(cc, 0, 0);
  CubeComplex::Square s;
  for (int k = 0; k < 4; ++k) {
    s.edge[k] = 0;
    s.flip[k] = false;
  }
  cc.squares.push_back(s);
  return cc;
}

CubeComplex wedge() {
  CubeComplex cc;
  cc.vertex_count = 1;
  add_edge(cc, 0, 0);
  add_edge(cc, 0, 0);
  return cc;
}

CubeComplex solid_cube() {
  CubeComplex cc;
  cc.vertex_count = 8;
  std::uint32_t eid[8][8] = {};
  for (std::uint32_t i = 0; i < 8; ++i)
    for (int ax = 0; ax < 3; ++ax) {
      std::uint32_t j = i | (1u << ax);
      if (j == i) continue;
      eid[i][j] = add_edge(cc, i, j);
    }
  auto square = [&](std::uint32_t base, int ax1, int ax2) {
    std::uint32_t cyc[4] = {base, base | (1u << ax1),
                            base | (1u << ax1) | (1u << ax2),
                            base | (1u << ax2)};
    CubeComplex::Square s;
    for (int k = 0; k < 4; ++k) {
      std::uint32_t a = cyc[k], b = cyc[(k + 1) % 4];
      bool fl = a > b;
      s.edge[k] = fl ? eid[b][a] : eid[a][b];
      s.flip[k] = fl;
    }
    cc.squares.push_back(s);
  };
  for (int ax1 = 0; ax1 < 3; ++ax1)
    for (int ax2 = ax1 + 1; ax2 < 3; ++ax2)
      for (int half = 0; half < 2; ++half) {
        int other = 3 - ax1 - ax2;
        square(half ? (1u << other) : 0u, ax1, ax2);
      }
  CubeComplex::BigCube big;
  big.dim = 3;
  for (std::uint32_t i = 0; i < 8; ++i) big.corners.push_back(i);
  cc.big_cubes.push_back(big);
  return cc;
}

Wall coordinate_cut(const CayleyBall& ball, int axis, int k) {
  std::vector<std::uint8_t> side(ball.size());
  Letter pos = axis == 0 ? 0 : 2, neg = axis == 0 ? 1 : 3;
  for (std::uint32_t v = 0; v < ball.size(); ++v)
    side[v] = coordinate(ball.word(v), pos, neg) <= k ? 0 : 1;
  return abstract_wall(ball, std::move(side),
                       (axis ? "y<=" : "x<=") + std::to_string(k));
}

WallspaceBundle line_edges(int radius, int margin) {
  WallspaceBundle b = bundle(GroupPresentation::free_abelian(1), radius, margin);
  b.space.walls = edge_walls(*b.ball);
  return b;
}

WallspaceBundle grid_cuts() {
  WallspaceBundle b = bundle(GroupPresentation::free_abelian(2), 4, 0);
  for (int axis = 0; axis < 2; ++axis)
    for (int k = -2; k <= 1; ++k)
      b.space.walls.push_back(coordinate_cut(*b.ball, axis, k));
  return b;
}

WallspaceBundle grid_vertical_only() {
  WallspaceBundle b = bundle(GroupPresentation::free_abelian(2), 4, 0);
  for (int k = -2; k <= 1; ++k)
    b.space.walls.push_back(coordinate_cut(*b.ball, 0, k));
  return b;
}

WallspaceBundle tree_edges(int radius, int margin) {
  WallspaceBundle b = bundle(GroupPresentation::free_group(2), radius, margin);
  b.space.walls = edge_walls(*b.ball);
  return b;
}

WallspaceBundle line_axis() {
  WallspaceBundle b = bundle(GroupPresentation::free_abelian(1), 6, 2);
  b.space.walls.push_back(wall_from_edge(*b.ball, 0, 0));
  return b;
}

WallspaceBundle grid_axis() {
  WallspaceBundle b = bundle(GroupPresentation::free_abelian(2), 6, 2);
  b.space.walls.push_back(coordinate_cut(*b.ball, 1, 0));
  b.space.walls.push_back(coordinate_cut(*b.ball, 0, 0));
  return b;
}

WallspaceBundle tree_axis() {
  WallspaceBundle b = bundle(GroupPresentation::free_group(2), 8, 4);
  b.space.walls.push_back(wall_from_edge(*b.ball, 0, 0));
  return b;
}

SelectionFixture grid_selection() {
  SelectionFixture f;
  f.ball = std::make_unique<CayleyBall>(GroupPresentation::free_abelian(2), 16);
  f.margin = 9;
  f.translate_bound = 3;
  f.families.push_back(WallFamily{"vertical", coordinate_cut(*f.ball, 0, 0)});
  f.families.push_back(WallFamily{"horizontal", coordinate_cut(*f.ball, 1, 0)});
  return f;
}

InduceFixture line_in_grid() {
  InduceFixture f;
  f.ambient = bundle(GroupPresentation::free_abelian(2), 6, 1);
  const CayleyBall& ball = *f.ambient.ball;
  const Alphabet& ab = ball.group().alphabet();
  const int trust = 5, depth = 3;
  for (int k = -2; k <= 2; ++k) {
    Word shift(static_cast<std::size_t>(std::abs(k)),
               static_cast<Letter>(k >= 0 ? 0 : 1));
    f.ambient.space.walls.push_back(
        wall_from_subgroup(ball, {ab.parse_word("b")}, shift, 0, trust, depth,
                           "vertical @ " + ab.print_word(shift)));
  }
  for (int k = -2; k <= 2; ++k) {
    Word shift(static_cast<std::size_t>(std::abs(k)),
               static_cast<Letter>(k >= 0 ? 2 : 3));
    f.ambient.space.walls.push_back(
        wall_from_subgroup(ball, {ab.parse_word("a")}, shift, 0, trust, depth,
                           "horizontal @ " + ab.print_word(shift)));
  }
  f.sub = std::make_unique<CayleyBall>(GroupPresentation::free_abelian(1), 4);
  f.letter_images = {Word{0}, Word{1}};
  f.sub_margin = 1;
  return f;
}

std::vector<std::vector<std::uint32_t>> delete_interior_edge(
    std::vector<std::vector<std::uint32_t>> adjacency) {
  std::size_t top = 0;
  for (const auto& row : adjacency) top = std::max(top, row.size());
  for (std::uint32_t u = 0; u < adjacency.size(); ++u) {
    if (adjacency[u].size() != top) continue;
    for (std::uint32_t v : adjacency[u]) {
      if (v <= u || adjacency[v].size() != top) continue;
      std::erase(adjacency[u], v);
      std::erase(adjacency[v], u);
      return adjacency;
    }
  }
  fail(ErrorKind::MalformedInput, "delete-interior-edge",
       "graph has no edge joining two maximum-degree vertices");
}

namespace {

std::string sides_text(const Wall& wall) {
  std::string s(wall.side.size(), 'L');
  for (std::size_t v = 0; v < wall.side.size(); ++v)
    s[v] = wall.side[v] == 0 ? 'L' : wall.side[v] == 1 ? 'R' : 'O';
  return s;
}

std::string cuts_spec(const Wallspace& ws) {
  std::ostringstream out;
  out << "version = 1\nmargin = " << ws.margin << "\n";
  for (const Wall& w : ws.walls)
    out << "\n[abstract]\nlabel = " << w.label << "\nsides = " << sides_text(w)
        << "\n";
  return out.str();
}

} // namespace

std::vector<FixtureFile> files() {
  std::vector<FixtureFile> out;
  out.push_back({"z.group", group_to_text(GroupPresentation::free_abelian(1))});
  out.push_back({"z2.group", group_to_text(GroupPresentation::free_abelian(2))});
  out.push_back({"f2.group", group_to_text(GroupPresentation::free_group(2))});
  out.push_back(
      {"surface.group", group_to_text(GroupPresentation::surface_genus2())});

  out.push_back({"line-edges.walls",
                 "version = 1\nmargin = 2\n\n[edges]\nenabled = true\n"});
  out.push_back({"grid-cuts.walls", cuts_spec(grid_cuts().space)});
  out.push_back({"grid-vertical.walls", cuts_spec(grid_vertical_only().space)});

  {
    SelectionFixture sel = grid_selection();
    std::ostringstream spec;
    spec << "version = 1\nmargin = " << sel.margin << "\n";
    for (const WallFamily& fam : sel.families)
      spec << "\n[abstract]\nlabel = " << fam.label
           << "\nsides = " << sides_text(fam.base) << "\n";
    out.push_back({"grid-families.walls", spec.str()});
  }

  out.push_back({"torus.cc", complex_to_text(torus())});
  out.push_back({"three-squares.cc", complex_to_text(three_squares())});
  out.push_back({"one-loop-square.cc", complex_to_text(one_loop_square())});
  out.push_back({"wedge.cc", complex_to_text(wedge())});
  out.push_back({"solid-cube.cc", complex_to_text(solid_cube())});
  return out;
}

} // namespace cubulate::fixtures
