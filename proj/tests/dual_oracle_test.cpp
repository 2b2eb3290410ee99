#include <doctest.h>

#include "cubulate/dual_complex.hpp"
#include "oracle.hpp"

#include <bit>
#include <chrono>

using namespace cubulate;

namespace {

Budgets roomy() {
  Budgets b;
  b.max_cube_dim = 16;
  return b;
}

} // namespace

TEST_CASE("dual zero-cubes match the exhaustive orientation oracle") {
  auto start = std::chrono::steady_clock::now();
  int nonempty = 0;
  for (std::uint32_t seed = 1; seed <= 100; ++seed) {
    WallspaceBundle b = test_oracle::random_space(seed);
    DualComplex dual = build_dual(b.space, roomy());
    std::vector<std::uint64_t> expect = test_oracle::oracle_zero_cubes(b.space);
    REQUIRE_MESSAGE(dual.vertices == expect, "disagreement at seed " << seed);
    if (!expect.empty()) ++nonempty;
  }
  CHECK(nonempty > 50);
  double elapsed = std::chrono::duration<double>(
                       std::chrono::steady_clock::now() - start)
                       .count();
  CHECK(elapsed < 10.0);
}

TEST_CASE("dual edges are exactly the hamming-one pairs") {
  for (std::uint32_t seed : {3u, 17u, 42u, 77u}) {
    WallspaceBundle b = test_oracle::random_space(seed);
    DualComplex dual = build_dual(b.space, roomy());
    std::size_t hamming_one = 0;
    for (std::size_t i = 0; i < dual.vertices.size(); ++i)
      for (std::size_t j = i + 1; j < dual.vertices.size(); ++j)
        if (std::popcount(dual.vertices[i] ^ dual.vertices[j]) == 1)
          ++hamming_one;
    CHECK(dual.edges.size() == hamming_one);
    for (const DualComplex::Edge& e : dual.edges) {
      std::uint64_t diff = dual.vertices[e.a] ^ dual.vertices[e.b];
      CHECK(std::popcount(diff) == 1);
      CHECK(diff == (1ull << e.wall));
    }
  }
}

TEST_CASE("dual distance equals hamming distance within a component") {
  for (std::uint32_t seed : {5u, 23u, 58u}) {
    WallspaceBundle b = test_oracle::random_space(seed);
    DualComplex dual = build_dual(b.space, roomy());
    if (dual.vertices.size() > 200) continue;
    int connected_pairs = 0;
    for (std::uint32_t i = 0; i < dual.vertices.size(); ++i)
      for (std::uint32_t j = i + 1; j < dual.vertices.size(); ++j) {
        int d = dual_distance(dual, i, j);
        int h = std::popcount(dual.vertices[i] ^ dual.vertices[j]);
        if (d >= 0) {
          CHECK(d == h);
          ++connected_pairs;
        }
      }
    if (dual.vertices.size() > 1) CHECK(connected_pairs > 0);
  }
}

TEST_CASE("walls spanned by a cube pairwise cross") {
  int cubes_seen = 0;
  for (std::uint32_t seed = 1; seed <= 40; ++seed) {
    WallspaceBundle b = test_oracle::random_space(seed);
    DualComplex dual = build_dual(b.space, roomy());
    for (const auto& level : dual.higher)
      for (const DualComplex::Cube& c : level) {
        ++cubes_seen;
        std::vector<std::uint32_t> spanned;
        for (std::uint32_t w = 0; w < dual.wall_count; ++w)
          if (c.walls & (1ull << w)) spanned.push_back(w);
        for (std::size_t i = 0; i < spanned.size(); ++i)
          for (std::size_t j = i + 1; j < spanned.size(); ++j)
            CHECK(walls_cross(b.space, b.space.walls[spanned[i]],
                              b.space.walls[spanned[j]]));
      }
  }
  CHECK(cubes_seen > 0);
}
