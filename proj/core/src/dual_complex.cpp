#include "cubulate/dual_complex.hpp"

#include "cubulate/errors.hpp"

#include <algorithm>
#include <bit>
#include <deque>
#include <set>
#include <string>
#include <unordered_map>
#include <unordered_set>

namespace cubulate {
namespace {

// side of every vertex with carrier incidences resolved to the nearest
// off-carrier vertex; ties go to the earliest-queued (smallest index) source
std::vector<std::uint8_t> resolved_sides(const CayleyBall& ball, const Wall& w) {
  std::vector<std::uint8_t> side = w.side;
  std::deque<std::uint32_t> queue;
  for (std::uint32_t v = 0; v < side.size(); ++v)
    if (side[v] != static_cast<std::uint8_t>(Side::On)) queue.push_back(v);
  const std::size_t nl = ball.group().alphabet().size();
  while (!queue.empty()) {
    std::uint32_t x = queue.front();
    queue.pop_front();
    for (Letter l = 0; l < nl; ++l) {
      std::uint32_t y = ball.step(x, l);
      if (y != CayleyBall::npos && side[y] == static_cast<std::uint8_t>(Side::On)) {
        side[y] = side[x];
        queue.push_back(y);
      }
    }
  }
  return side;
}

struct ConsistencyTables {
  std::uint32_t wall_count = 0;
  std::vector<std::uint8_t> side_ok;  // [w * 2 + s]
  std::vector<std::uint8_t> pair_ok;  // [(a * W + b) * 4 + (sa * 2 + sb)]

  bool flip_ok(std::uint64_t mask, std::uint32_t w) const {
    std::uint64_t flipped = mask ^ (1ull << w);
    std::uint32_t sw = (flipped >> w) & 1;
    if (!side_ok[w * 2 + sw]) return false;
    for (std::uint32_t x = 0; x < wall_count; ++x) {
      if (x == w) continue;
      std::uint32_t sx = (flipped >> x) & 1;
      if (!pair_ok[(static_cast<std::size_t>(w) * wall_count + x) * 4 + sw * 2 + sx])
        return false;
    }
    return true;
  }

  bool consistent(std::uint64_t mask) const {
    for (std::uint32_t w = 0; w < wall_count; ++w)
      if (!side_ok[w * 2 + ((mask >> w) & 1)]) return false;
    for (std::uint32_t a = 0; a < wall_count; ++a)
      for (std::uint32_t b = a + 1; b < wall_count; ++b) {
        std::uint32_t sa = (mask >> a) & 1;
        std::uint32_t sb = (mask >> b) & 1;
        if (!pair_ok[(static_cast<std::size_t>(a) * wall_count + b) * 4 + sa * 2 + sb])
          return false;
      }
    return true;
  }
};

ConsistencyTables make_tables(const Wallspace& ws) {
  const std::uint32_t W = static_cast<std::uint32_t>(ws.walls.size());
  ConsistencyTables t;
  t.wall_count = W;
  t.side_ok.assign(static_cast<std::size_t>(W) * 2, 0);
  t.pair_ok.assign(static_cast<std::size_t>(W) * W * 4, 0);
  const std::uint32_t n = ws.trust_count();
  for (std::uint32_t v = 0; v < n; ++v) {
    for (std::uint32_t a = 0; a < W; ++a) {
      std::uint8_t sa = ws.walls[a].side[v];
      if (sa > 1) continue;
      t.side_ok[a * 2 + sa] = 1;
      for (std::uint32_t b = a + 1; b < W; ++b) {
        std::uint8_t sb = ws.walls[b].side[v];
        if (sb > 1) continue;
        t.pair_ok[(static_cast<std::size_t>(a) * W + b) * 4 + sa * 2 + sb] = 1;
        t.pair_ok[(static_cast<std::size_t>(b) * W + a) * 4 + sb * 2 + sa] = 1;
      }
    }
  }
  return t;
}

} // namespace

std::uint64_t principal_orientation(const Wallspace& ws, std::uint32_t v) {
  std::uint64_t mask = 0;
  for (std::size_t w = 0; w < ws.walls.size(); ++w) {
    std::vector<std::uint8_t> side = resolved_sides(*ws.ball, ws.walls[w]);
    if (side[v] == static_cast<std::uint8_t>(Side::Right)) mask |= 1ull << w;
  }
  return mask;
}

DualComplex build_dual(const Wallspace& ws, const Budgets& budgets) {
  const std::uint32_t W = static_cast<std::uint32_t>(ws.walls.size());
  if (W > 64 || W > budgets.walls)
    fail(ErrorKind::Size, "dual",
         "wall budget exceeded: " + std::to_string(W) + " walls");

  DualComplex dual;
  dual.wall_count = W;

  std::vector<std::vector<std::uint8_t>> resolved;
  resolved.reserve(W);
  for (const Wall& w : ws.walls) resolved.push_back(resolved_sides(*ws.ball, w));

  ConsistencyTables tables = make_tables(ws);

  const std::uint32_t n = ws.trust_count();
  std::vector<std::uint64_t> seed(n, 0);
  for (std::uint32_t v = 0; v < n; ++v)
    for (std::uint32_t w = 0; w < W; ++w)
      if (resolved[w][v] == static_cast<std::uint8_t>(Side::Right))
        seed[v] |= 1ull << w;

  std::unordered_set<std::uint64_t> found;
  std::deque<std::uint64_t> queue;
  for (std::uint32_t v = 0; v < n; ++v) {
    if (!tables.consistent(seed[v])) {
      ++dual.dropped_seeds;
      continue;
    }
    if (found.count(seed[v])) continue;
    if (found.size() >= budgets.zero_cubes)
      fail(ErrorKind::Size, "dual",
           "0-cube budget of " + std::to_string(budgets.zero_cubes) +
               " exceeded");
    found.insert(seed[v]);
    queue.push_back(seed[v]);
  }
  while (!queue.empty()) {
    std::uint64_t o = queue.front();
    queue.pop_front();
    for (std::uint32_t w = 0; w < W; ++w) {
      std::uint64_t o2 = o ^ (1ull << w);
      if (found.count(o2) || !tables.flip_ok(o, w)) continue;
      if (found.size() >= budgets.zero_cubes)
        fail(ErrorKind::Size, "dual",
             "0-cube budget of " + std::to_string(budgets.zero_cubes) +
                 " exceeded");
      found.insert(o2);
      queue.push_back(o2);
    }
  }

  dual.vertices.assign(found.begin(), found.end());
  std::sort(dual.vertices.begin(), dual.vertices.end());
  std::unordered_map<std::uint64_t, std::uint32_t> index;
  index.reserve(dual.vertices.size());
  for (std::uint32_t i = 0; i < dual.vertices.size(); ++i)
    index[dual.vertices[i]] = i;

  dual.principal.assign(n, CayleyBall::npos);
  for (std::uint32_t v = 0; v < n; ++v) {
    auto it = index.find(seed[v]);
    if (it != index.end()) dual.principal[v] = it->second;
  }

  for (std::uint32_t i = 0; i < dual.vertices.size(); ++i)
    for (std::uint32_t w = 0; w < W; ++w) {
      std::uint64_t o2 = dual.vertices[i] ^ (1ull << w);
      auto it = index.find(o2);
      if (it != index.end() && i < it->second)
        dual.edges.push_back({i, it->second, w});
    }

  // grow cubes dimension by dimension from their all-Left corners
  std::set<std::pair<std::uint32_t, std::uint64_t>> level;
  for (const DualComplex::Edge& e : dual.edges) {
    std::uint64_t bit = 1ull << e.wall;
    std::uint32_t base = (dual.vertices[e.a] & bit) ? e.b : e.a;
    level.insert({base, bit});
  }
  int dim = 1;
  while (!level.empty()) {
    std::set<std::pair<std::uint32_t, std::uint64_t>> next;
    for (const auto& [base, mask] : level) {
      std::uint64_t top = 1ull << (63 - std::countl_zero(mask));
      for (std::uint32_t w = 0; w < W; ++w) {
        std::uint64_t bit = 1ull << w;
        if (bit <= top || (dual.vertices[base] & bit)) continue;
        auto other = index.find(dual.vertices[base] | bit);
        if (other != index.end() && level.count({other->second, mask}))
          next.insert({base, mask | bit});
      }
    }
    if (!next.empty()) {
      if (dim + 1 > static_cast<int>(budgets.max_cube_dim))
        fail(ErrorKind::Size, "dual",
             "cube dimension budget of " + std::to_string(budgets.max_cube_dim) +
                 " exceeded");
      dual.higher.emplace_back();
      for (const auto& [base, mask] : next)
        dual.higher.back().push_back({base, mask});
    }
    level = std::move(next);
    ++dim;
  }

  return dual;
}

int DualComplex::dimension() const {
  if (!higher.empty()) return static_cast<int>(higher.size()) + 1;
  if (!edges.empty()) return 1;
  if (!vertices.empty()) return 0;
  return -1;
}

std::size_t DualComplex::cube_count(int dim) const {
  if (dim == 0) return vertices.size();
  if (dim == 1) return edges.size();
  if (dim >= 2 && dim - 2 < static_cast<int>(higher.size()))
    return higher[dim - 2].size();
  return 0;
}

int dual_distance(const DualComplex& dual, std::uint32_t a, std::uint32_t b) {
  if (a == b) return 0;
  std::vector<std::vector<std::uint32_t>> adj(dual.vertices.size());
  for (const DualComplex::Edge& e : dual.edges) {
    adj[e.a].push_back(e.b);
    adj[e.b].push_back(e.a);
  }
  std::vector<int> d(dual.vertices.size(), -1);
  std::deque<std::uint32_t> queue{a};
  d[a] = 0;
  while (!queue.empty()) {
    std::uint32_t v = queue.front();
    queue.pop_front();
    for (std::uint32_t u : adj[v]) {
      if (d[u] != -1) continue;
      d[u] = d[v] + 1;
      if (u == b) return d[u];
      queue.push_back(u);
    }
  }
  return -1;
}

} // namespace cubulate
