#pragma once

#include "cubulate/errors.hpp"
#include "cubulate/io.hpp"
#include "cubulate/wallspace.hpp"

#include <array>
#include <cstdint>
#include <deque>
#include <memory>
#include <random>
#include <set>
#include <unordered_set>
#include <vector>

// Exhaustive reference for build_dual on small systems: enumerate every
// orientation of the walls, keep the ones whose chosen sides and side pairs
// are inhabited by trusted vertices, and take the flip components containing
// a principal orientation.

namespace test_oracle {

inline std::vector<int> graph_distances(const cubulate::CayleyBall& ball,
                                        std::uint32_t from) {
  std::vector<int> d(ball.size(), -1);
  std::deque<std::uint32_t> q{from};
  d[from] = 0;
  const std::size_t nl = ball.group().alphabet().size();
  while (!q.empty()) {
    std::uint32_t x = q.front();
    q.pop_front();
    for (cubulate::Letter l = 0; l < nl; ++l) {
      std::uint32_t y = ball.step(x, l);
      if (y != cubulate::CayleyBall::npos && d[y] < 0) {
        d[y] = d[x] + 1;
        q.push_back(y);
      }
    }
  }
  return d;
}

inline int resolved_side(const cubulate::Wallspace& ws, std::uint32_t wall,
                         std::uint32_t v) {
  const cubulate::Wall& w = ws.walls[wall];
  if (w.side[v] != 2) return w.side[v];
  std::vector<int> d = graph_distances(*ws.ball, v);
  int best = -1;
  int side = 2;
  for (std::uint32_t u = 0; u < ws.ball->size(); ++u) {
    if (w.side[u] == 2 || d[u] < 0) continue;
    if (best < 0 || d[u] < best) {
      best = d[u];
      side = w.side[u];
    }
  }
  return side;
}

inline std::vector<std::uint64_t> oracle_zero_cubes(
    const cubulate::Wallspace& ws) {
  const std::uint32_t W = static_cast<std::uint32_t>(ws.walls.size());
  const std::uint32_t n = ws.trust_count();

  std::vector<std::array<bool, 2>> side_ok(W, {false, false});
  std::vector<bool> quad(static_cast<std::size_t>(W) * W * 4, false);
  for (std::uint32_t v = 0; v < n; ++v)
    for (std::uint32_t a = 0; a < W; ++a) {
      std::uint8_t sa = ws.walls[a].side[v];
      if (sa > 1) continue;
      side_ok[a][sa] = true;
      for (std::uint32_t b = a + 1; b < W; ++b) {
        std::uint8_t sb = ws.walls[b].side[v];
        if (sb > 1) continue;
        quad[(static_cast<std::size_t>(a) * W + b) * 4 + sa * 2 + sb] = true;
      }
    }

  auto consistent = [&](std::uint64_t m) {
    for (std::uint32_t a = 0; a < W; ++a)
      if (!side_ok[a][(m >> a) & 1]) return false;
    for (std::uint32_t a = 0; a < W; ++a)
      for (std::uint32_t b = a + 1; b < W; ++b)
        if (!quad[(static_cast<std::size_t>(a) * W + b) * 4 +
                  ((m >> a) & 1) * 2 + ((m >> b) & 1)])
          return false;
    return true;
  };

  std::set<std::uint64_t> seeds;
  for (std::uint32_t v = 0; v < n; ++v) {
    std::uint64_t m = 0;
    for (std::uint32_t w = 0; w < W; ++w)
      if (resolved_side(ws, w, v) == 1) m |= 1ull << w;
    if (consistent(m)) seeds.insert(m);
  }

  std::unordered_set<std::uint64_t> keep(seeds.begin(), seeds.end());
  std::deque<std::uint64_t> q(seeds.begin(), seeds.end());
  while (!q.empty()) {
    std::uint64_t m = q.front();
    q.pop_front();
    for (std::uint32_t w = 0; w < W; ++w) {
      std::uint64_t m2 = m ^ (1ull << w);
      if (!keep.count(m2) && consistent(m2)) {
        keep.insert(m2);
        q.push_back(m2);
      }
    }
  }

  std::vector<std::uint64_t> out(keep.begin(), keep.end());
  std::sort(out.begin(), out.end());
  return out;
}

inline cubulate::WallspaceBundle random_space(std::uint32_t seed) {
  using namespace cubulate;
  std::mt19937 rng(seed);
  WallspaceBundle b;
  switch (rng() % 3) {
    case 0:
      b.ball = std::make_unique<CayleyBall>(GroupPresentation::free_abelian(1),
                                            6 + static_cast<int>(rng() % 9));
      break;
    case 1:
      b.ball = std::make_unique<CayleyBall>(GroupPresentation::free_abelian(2),
                                            2 + static_cast<int>(rng() % 2));
      break;
    default:
      b.ball = std::make_unique<CayleyBall>(GroupPresentation::free_group(2), 2);
      break;
  }
  b.space.ball = b.ball.get();
  b.space.margin = static_cast<int>(rng() % 2);
  int walls = 1 + static_cast<int>(rng() % 12);
  std::uniform_int_distribution<int> sidep(0, 7);
  for (int i = 0; i < walls; ++i) {
    for (int attempt = 0; attempt < 32; ++attempt) {
      std::vector<std::uint8_t> side(b.ball->size());
      for (std::uint8_t& s : side) {
        int r = sidep(rng);
        s = r < 3 ? 0 : r < 6 ? 1 : 2;
      }
      try {
        b.space.walls.push_back(abstract_wall(*b.ball, std::move(side)));
        break;
      } catch (const cubulate::Error&) {
      }
    }
  }
  return b;
}

} // namespace test_oracle
