#pragma once

#include <cstddef>
#include <cstdint>

namespace cubulate {

// Desk-scale budgets.  Every limit is overridable programmatically and, in the
// CLI, through CUBULATE_BUDGET_* environment variables.
struct Budgets {
  std::size_t rewrite_steps = 10000; // per normal-form call
  std::size_t ball_vertices = 200000;
  std::size_t walls = 64;            // build_dual input cap
  std::size_t zero_cubes = 1000000;
  std::size_t max_cube_dim = 8;
  std::size_t median_vertices = 2000;
  std::size_t oracle_walls = 20;     // exhaustive orientation enumeration cap
};

// Reads CUBULATE_BUDGET_{REWRITE,VERTICES,WALLS,ZERO_CUBES,MAX_DIM} from the
// environment on top of the defaults.
Budgets budgets_from_env();

inline int default_margin(int radius) { return (radius + 3) / 4; }
inline int default_depth_threshold(int radius, int margin) {
  int r = radius - margin;
  return (r + 1) / 2;
}

} // namespace cubulate
