#include "cubulate/median.hpp"

#include "cubulate/errors.hpp"

#include <bit>
#include <deque>
#include <string>

namespace cubulate {

MedianReport check_median(const std::vector<std::vector<std::uint32_t>>& adjacency,
                          const Budgets& budgets) {
  const std::uint32_t n = static_cast<std::uint32_t>(adjacency.size());
  if (n > budgets.median_vertices)
    fail(ErrorKind::Size, "median",
         "graph has " + std::to_string(n) + " vertices, budget is " +
             std::to_string(budgets.median_vertices));
  MedianReport report;
  if (n == 0) {
    report.is_median = true;
    report.connected = true;
    return report;
  }

  std::vector<std::vector<int>> dist(n, std::vector<int>(n, -1));
  for (std::uint32_t s = 0; s < n; ++s) {
    dist[s][s] = 0;
    std::deque<std::uint32_t> queue{s};
    while (!queue.empty()) {
      std::uint32_t v = queue.front();
      queue.pop_front();
      for (std::uint32_t u : adjacency[v])
        if (dist[s][u] == -1) {
          dist[s][u] = dist[s][v] + 1;
          queue.push_back(u);
        }
    }
  }
  for (std::uint32_t v = 0; v < n; ++v)
    if (dist[0][v] == -1) return report;  // not connected, not median
  report.connected = true;

  // interval bitsets: on_geodesic[x][y] marks m with d(x,m)+d(m,y) = d(x,y)
  const std::size_t blocks = (n + 63) / 64;
  std::vector<std::uint64_t> interval(static_cast<std::size_t>(n) * n * blocks, 0);
  auto row = [&](std::uint32_t x, std::uint32_t y) {
    return interval.data() + (static_cast<std::size_t>(x) * n + y) * blocks;
  };
  for (std::uint32_t x = 0; x < n; ++x)
    for (std::uint32_t y = x; y < n; ++y) {
      std::uint64_t* r = row(x, y);
      for (std::uint32_t m = 0; m < n; ++m)
        if (dist[x][m] + dist[m][y] == dist[x][y]) r[m / 64] |= 1ull << (m % 64);
      if (x != y)
        for (std::size_t b = 0; b < blocks; ++b) row(y, x)[b] = r[b];
    }

  report.is_median = true;
  for (std::uint32_t x = 0; x < n && report.is_median; ++x)
    for (std::uint32_t y = x + 1; y < n && report.is_median; ++y)
      for (std::uint32_t z = y + 1; z < n; ++z) {
        std::uint32_t count = 0;
        const std::uint64_t* xy = row(x, y);
        const std::uint64_t* yz = row(y, z);
        const std::uint64_t* xz = row(x, z);
        for (std::size_t b = 0; b < blocks; ++b)
          count += static_cast<std::uint32_t>(
              std::popcount(xy[b] & yz[b] & xz[b]));
        if (count != 1) {
          report.is_median = false;
          report.x = x;
          report.y = y;
          report.z = z;
          report.median_count = count;
          break;
        }
      }
  return report;
}

} // namespace cubulate
