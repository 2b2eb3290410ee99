#pragma once

#include "cubulate/wallspace.hpp"

#include <cstdint>
#include <vector>

namespace cubulate {

// Cube complex dual to a wall system.  0-cubes are consistent orientations of
// the walls (bit w set = Right side of wall w), reached by flipping one wall
// at a time starting from the orientations induced by trust-ball vertices.
// Edges join orientations differing on one wall; an n-cube is recorded by its
// all-Left corner and the set of walls it spans, with every corner present.
struct DualComplex {
  std::uint32_t wall_count = 0;

  std::vector<std::uint64_t> vertices;  // sorted ascending

  struct Edge {
    std::uint32_t a = 0, b = 0;  // vertex indices, a < b
    std::uint32_t wall = 0;
    bool operator==(const Edge&) const = default;
  };
  std::vector<Edge> edges;

  struct Cube {
    std::uint32_t base = 0;       // vertex index of the all-Left corner
    std::uint64_t walls = 0;      // spanned walls, popcount = dimension
    bool operator==(const Cube&) const = default;
  };
  std::vector<std::vector<Cube>> higher;  // higher[k]: cubes of dimension k+2

  // trust-ball vertex -> its orientation's index in vertices
  std::vector<std::uint32_t> principal;
  std::uint32_t dropped_seeds = 0;  // trust vertices whose orientation picked
                                    // a side invisible in the trust ball

  int dimension() const;
  std::size_t cube_count(int dim) const;

  bool operator==(const DualComplex&) const = default;
};

// Orientation induced by ball vertex v: the side containing v, with carrier
// incidences resolved to the side of the nearest off-carrier vertex (ties to
// the smallest index).
std::uint64_t principal_orientation(const Wallspace& ws, std::uint32_t v);

DualComplex build_dual(const Wallspace& ws, const Budgets& budgets = {});

// Graph distance in the 1-skeleton, -1 when disconnected.
int dual_distance(const DualComplex& dual, std::uint32_t a, std::uint32_t b);

} // namespace cubulate
