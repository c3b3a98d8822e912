#include <benchmark/benchmark.h>

#include <random>

#include "polarfront/directions.hpp"
#include "polarfront/front_ops.hpp"
#include "polarfront/hypervolume.hpp"
#include "polarfront/projection.hpp"
#include "polarfront/statistics.hpp"

using namespace polarfront;

namespace {

// Points on the positive unit sphere: a concave front around eta = 0.
std::vector<ObjectiveVector> sphere_points(std::size_t dim, std::size_t count, std::uint64_t seed) {
  const auto grid = sample_directions(dim, count, seed);
  std::vector<ObjectiveVector> out;
  for (std::size_t k = 0; k < grid->size(); ++k) out.emplace_back(grid->direction(k));
  return out;
}

FrontEnsemble random_ensemble(std::size_t dim, std::size_t rows, std::size_t k) {
  const auto grid = sample_directions(dim, k, 11);
  const ReferenceVector eta(std::vector<double>(dim, 0.0));
  std::vector<GridFront> fronts;
  for (std::size_t n = 0; n < rows; ++n) {
    fronts.push_back(front_from_points(PointFront(eta, sphere_points(dim, 20, 100 + n)), grid));
  }
  return FrontEnsemble::from_fronts(fronts);
}

}  // namespace

static void BM_FrontFromPoints(benchmark::State& state) {
  const auto k = static_cast<std::size_t>(state.range(0));
  const PointFront pf(ReferenceVector{0.0, 0.0, 0.0}, sphere_points(3, 200, 1));
  const auto grid = sample_directions(3, k, 2);
  for (auto _ : state) benchmark::DoNotOptimize(front_from_points(pf, grid));
  state.SetItemsProcessed(static_cast<std::int64_t>(state.iterations() * k * 200));
}
BENCHMARK(BM_FrontFromPoints)->Arg(1024)->Arg(16384);

static void BM_HypervolumeMC(benchmark::State& state) {
  const auto k = static_cast<std::size_t>(state.range(0));
  const PointFront pf(ReferenceVector{0.0, 0.0}, {ObjectiveVector{1.0, 2.0}, ObjectiveVector{2.0, 1.0}});
  const auto grid = equi_angular_grid_2d(k);
  for (auto _ : state) benchmark::DoNotOptimize(hypervolume_mc(pf, grid));
}
BENCHMARK(BM_HypervolumeMC)->Arg(4096)->Arg(65536);

static void BM_QuantileFront(benchmark::State& state) {
  const auto e = random_ensemble(3, static_cast<std::size_t>(state.range(0)), 2048);
  for (auto _ : state) benchmark::DoNotOptimize(quantile_front(e, 0.9));
}
BENCHMARK(BM_QuantileFront)->Arg(50)->Arg(200);

static void BM_SliceStatistics(benchmark::State& state) {
  const auto e = random_ensemble(3, 100, static_cast<std::size_t>(state.range(0)));
  const SliceSpec spec(3, {0, 1}, {0.6});
  const auto sub = equi_angular_grid_2d(181);
  const double alphas[] = {0.05, 0.95};
  for (auto _ : state) benchmark::DoNotOptimize(slice_statistics(e, spec, sub, alphas));
}
BENCHMARK(BM_SliceStatistics)->Arg(1024)->Arg(8192);
BENCHMARK_MAIN();
