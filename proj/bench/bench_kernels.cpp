// Serial references against the OpenMP kernels.

#include <benchmark/benchmark.h>

#include <map>
#include <utility>

#include "diam/directional.hpp"
#include "diam/exact.hpp"
#include "diam/generate.hpp"
#include "diam/grid.hpp"
#include "diam/pipeline.hpp"
#include "diam/serial.hpp"

using namespace diam;

namespace {

const PointSet& points(std::size_t n, std::size_t d) {
  static std::map<std::pair<std::size_t, std::size_t>, PointSet> cache;
  auto it = cache.find({n, d});
  if (it == cache.end()) it = cache.emplace(std::pair{n, d}, generate(GeneratorKind::UniformBall, n, d, 42)).first;
  return it->second;
}

GridSpec cells(const PointSet& s, double eps) {
  const BoundingBox b = bounding_box(s);
  return {b.lo, make_grid_sizes(largest_side(b), eps, s.dim()).xi, GridMode::CellCenter};
}

void BM_BruteSerial(benchmark::State& st) {
  const PointSet& s = points(st.range(0), 6);
  for (auto _ : st) benchmark::DoNotOptimize(serial::brute_force_diameter(s));
}
void BM_BruteParallel(benchmark::State& st) {
  const PointSet& s = points(st.range(0), 6);
  for (auto _ : st) benchmark::DoNotOptimize(brute_force_diameter(s));
}

void BM_RoundSerial(benchmark::State& st) {
  const PointSet& s = points(st.range(0), 6);
  const GridSpec g = cells(s, 0.1);
  for (auto _ : st) benchmark::DoNotOptimize(serial::round_to_cell_centers(s, g));
}
void BM_RoundParallel(benchmark::State& st) {
  const PointSet& s = points(st.range(0), 6);
  const GridSpec g = cells(s, 0.1);
  for (auto _ : st) benchmark::DoNotOptimize(round_to_cell_centers(s, g));
}

void BM_AgarwalSerial(benchmark::State& st) {
  const PointSet& s = points(st.range(0), 4);
  for (auto _ : st) benchmark::DoNotOptimize(serial::agarwal_diameter(s, 0.05));
}
void BM_AgarwalParallel(benchmark::State& st) {
  const PointSet& s = points(st.range(0), 4);
  for (auto _ : st) benchmark::DoNotOptimize(agarwal_diameter(s, 0.05));
}

void BM_Pipeline(benchmark::State& st) {
  const PointSet& s = points(st.range(0), 6);
  for (auto _ : st) benchmark::DoNotOptimize(approximate_diameter(s, 0.1));
}

}  // namespace

BENCHMARK(BM_BruteSerial)->Arg(2000)->Arg(8000)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_BruteParallel)->Arg(2000)->Arg(8000)->Unit(benchmark::kMillisecond)->UseRealTime();
BENCHMARK(BM_RoundSerial)->Arg(100000)->Arg(400000)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_RoundParallel)->Arg(100000)->Arg(400000)->Unit(benchmark::kMillisecond)->UseRealTime();
BENCHMARK(BM_AgarwalSerial)->Arg(5000)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_AgarwalParallel)->Arg(5000)->Unit(benchmark::kMillisecond)->UseRealTime();
BENCHMARK(BM_Pipeline)->Arg(10000)->Arg(100000)->Unit(benchmark::kMillisecond)->UseRealTime();

BENCHMARK_MAIN();
