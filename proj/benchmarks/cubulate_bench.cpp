#include <benchmark/benchmark.h>

#include "cubulate/cayley_ball.hpp"
#include "cubulate/criteria.hpp"
#include "cubulate/cube_complex.hpp"
#include "cubulate/dual_complex.hpp"
#include "cubulate/fixtures.hpp"
#include "cubulate/median.hpp"
#include "cubulate/rewriting.hpp"
#include "cubulate/wallspace.hpp"

using namespace cubulate;

static void BM_BallFreeAbelian(benchmark::State& state) {
  GroupPresentation group = GroupPresentation::free_abelian(2);
  for (auto _ : state) {
    CayleyBall ball(group, static_cast<int>(state.range(0)));
    benchmark::DoNotOptimize(ball.size());
  }
}
BENCHMARK(BM_BallFreeAbelian)->Arg(4)->Arg(10)->Arg(16);

static void BM_BallSurface(benchmark::State& state) {
  GroupPresentation group = GroupPresentation::surface_genus2();
  for (auto _ : state) {
    CayleyBall ball(group, 3);
    benchmark::DoNotOptimize(ball.size());
  }
}
BENCHMARK(BM_BallSurface);

static void BM_NormalFormSurface(benchmark::State& state) {
  GroupPresentation group = GroupPresentation::surface_genus2();
  Word w = group.alphabet().parse_word("abcdDCBAabcdDCBAabcd");
  for (auto _ : state) benchmark::DoNotOptimize(group.normal_form(w));
}
BENCHMARK(BM_NormalFormSurface);

static void BM_EdgeWalls(benchmark::State& state) {
  CayleyBall ball(GroupPresentation::free_group(2),
                  static_cast<int>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(edge_walls(ball));
}
BENCHMARK(BM_EdgeWalls)->Arg(3)->Arg(5);

static void BM_DualGrid(benchmark::State& state) {
  WallspaceBundle grid = fixtures::grid_cuts();
  for (auto _ : state) {
    DualComplex dual = build_dual(grid.space);
    benchmark::DoNotOptimize(dual.vertices.size());
  }
}
BENCHMARK(BM_DualGrid);

static void BM_SeparationProfile(benchmark::State& state) {
  WallspaceBundle grid = fixtures::grid_cuts();
  for (auto _ : state)
    benchmark::DoNotOptimize(linear_separation_profile(grid.space, 3, 2));
}
BENCHMARK(BM_SeparationProfile);

static void BM_MedianCheck(benchmark::State& state) {
  WallspaceBundle grid = fixtures::grid_cuts();
  auto adjacency = from_dual(build_dual(grid.space)).adjacency();
  for (auto _ : state) benchmark::DoNotOptimize(check_median(adjacency));
}
BENCHMARK(BM_MedianCheck);

static void BM_AxisSearch(benchmark::State& state) {
  WallspaceBundle line = fixtures::line_axis();
  Word a = line.ball->group().alphabet().parse_word("a");
  for (auto _ : state)
    benchmark::DoNotOptimize(axis_separation(line.space, a, 2, 2));
}
BENCHMARK(BM_AxisSearch);

BENCHMARK_MAIN();
