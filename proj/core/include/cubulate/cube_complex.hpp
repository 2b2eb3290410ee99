#pragma once

#include "cubulate/config.hpp"
#include "cubulate/dual_complex.hpp"

#include <cstdint>
#include <string>
#include <vector>

namespace cubulate {

// Combinatorial cube complex with explicit attaching data.
//
// Edges are unoriented pairs of vertices (loops allowed).  A square lists its
// four boundary edges in cyclic corner order c0 c1 c2 c3: boundary edge k runs
// ck -> c(k+1), and flip[k] records traversal against the edge's intrinsic
// v[0] -> v[1] direction.  Cubes of dimension three and up are determined by
// their corner vertices (bit i of the corner index = coordinate on axis i);
// identifications are only expressible through edges and squares.
struct CubeComplex {
  std::uint32_t vertex_count = 0;

  struct EdgeC {
    std::uint32_t v[2] = {0, 0};
    std::uint32_t source(bool flip) const { return v[flip ? 1 : 0]; }
    std::uint32_t target(bool flip) const { return v[flip ? 0 : 1]; }
    bool operator==(const EdgeC&) const = default;
  };
  std::vector<EdgeC> edges;

  struct Square {
    std::uint32_t edge[4] = {0, 0, 0, 0};
    bool flip[4] = {false, false, false, false};
    bool operator==(const Square&) const = default;
  };
  std::vector<Square> squares;

  struct BigCube {
    std::uint8_t dim = 3;
    std::vector<std::uint32_t> corners;  // size 2^dim
    bool operator==(const BigCube&) const = default;
  };
  std::vector<BigCube> big_cubes;

  std::uint32_t square_corner(const Square& s, int k) const {
    return edges[s.edge[k]].source(s.flip[k]);
  }

  int dimension() const;
  std::size_t cube_count(int dim) const;

  // 1-skeleton with loops dropped and multi-edges collapsed
  std::vector<std::vector<std::uint32_t>> adjacency() const;

  bool operator==(const CubeComplex&) const = default;
};

// Structural validation: index ranges, square boundaries that close up,
// corner-determined faces of big cubes all present (edges unique, squares
// found up to rotation and reflection).  Throws Structural on violation.
void validate(const CubeComplex& cc);

// The cube complex underlying a dual complex (no identifications).
CubeComplex from_dual(const DualComplex& dual);

// An edge end: side `end` of edge `e`, a vertex of the link at that corner.
// Loops contribute both ends to the same vertex's link.
struct EdgeEnd {
  std::uint32_t e = 0;
  std::uint8_t end = 0;
  bool operator==(const EdgeEnd&) const = default;
  bool operator<(const EdgeEnd& o) const {
    return e != o.e ? e < o.e : end < o.end;
  }
};

// Nonpositive curvature via vertex links: each link must be a simplicial flag
// complex.  Corners of k-cubes give its (k-1)-simplices; the check reports the
// first offending vertex.
struct NpcReport {
  bool npc = true;
  bool simplicial = true;
  bool flag = true;
  std::uint32_t vertex = 0;       // offending vertex when !npc
  std::string detail;
};

NpcReport check_npc(const CubeComplex& cc, const Budgets& budgets = {});

} // namespace cubulate
