#pragma once

#include "cubulate/config.hpp"

#include <cstdint>
#include <vector>

namespace cubulate {

// Median verdict for a finite connected graph: every triple of vertices must
// admit exactly one vertex lying on geodesics between all three pairs.  The
// first failing triple is reported with its candidate count.
struct MedianReport {
  bool is_median = false;
  bool connected = false;
  std::uint32_t x = 0, y = 0, z = 0;
  std::uint32_t median_count = 1;
};

MedianReport check_median(const std::vector<std::vector<std::uint32_t>>& adjacency,
                          const Budgets& budgets = {});

} // namespace cubulate
