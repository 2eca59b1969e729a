#include <benchmark/benchmark.h>

#include <random>

#include "rootex/costmap.hpp"
#include "rootex/evaluate.hpp"
#include "rootex/pathfind.hpp"
#include "rootex/phantom.hpp"
#include "rootex/pipeline.hpp"

using namespace rootex;

namespace {

PhantomSpec tube_spec(int n) {
  PhantomSpec spec;
  spec.nx = spec.ny = spec.nz = n;
  const double c = n / 2.0;
  spec.paths.push_back({-1, {{c, c, 2.0}, {c, c, n - 3.0}}, {3.0}});
  spec.gaps.push_back({0, n * 0.4, n * 0.4 + 4.0});
  return spec;
}

VolumeF random_cost_volume(int n, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> dist(0.01, 1.0);
  VolumeF vol(n, n, n);
  for (std::size_t i = 0; i < vol.size(); ++i) vol[i] = float(dist(rng));
  return vol;
}

void BM_RadiusMap(benchmark::State& state) {
  const int n = int(state.range(0));
  const Phantom ph = generate(tube_spec(n), 0);
  for (auto _ : state) {
    benchmark::DoNotOptimize(radius_map(ph.volume, 0.5, 0.75, 1));
  }
  state.SetItemsProcessed(state.iterations() * std::int64_t(ph.volume.size()));
}
BENCHMARK(BM_RadiusMap)->Arg(48)->Arg(64);

void BM_ShortestPaths(benchmark::State& state) {
  const int n = int(state.range(0));
  const VolumeF cost = random_cost_volume(n, 7);
  ExtractionConfig cfg;
  cfg.gap_len = 0;
  cfg.omega = kInfD;
  for (auto _ : state) {
    benchmark::DoNotOptimize(shortest_paths(cost, {n / 2, n / 2, n / 2}, cfg));
  }
  state.SetItemsProcessed(state.iterations() * std::int64_t(cost.size()));
}
BENCHMARK(BM_ShortestPaths)->Arg(32)->Arg(64);

void BM_GapClosingPaths(benchmark::State& state) {
  const int n = 64;
  const Phantom ph = generate(tube_spec(n), 0);
  ExtractionConfig cfg;
  const VolumeF c_gap = cost_map_gap(ph.volume, cost_map_seg(ph.volume, cfg), cfg);
  for (auto _ : state) {
    benchmark::DoNotOptimize(shortest_paths(c_gap, {n / 2, n / 2, 2}, cfg));
  }
}
BENCHMARK(BM_GapClosingPaths);

void BM_FullPipeline(benchmark::State& state) {
  const int n = int(state.range(0));
  const Phantom ph = generate(tube_spec(n), 0);
  ExtractionConfig cfg;
  for (auto _ : state) {
    benchmark::DoNotOptimize(run_extract(ph.volume, {n / 2, n / 2, 2}, cfg));
  }
}
BENCHMARK(BM_FullPipeline)->Arg(64)->Arg(96)->Unit(benchmark::kMillisecond);

void BM_Score(benchmark::State& state) {
  const Phantom ph = generate(tube_spec(64), 0);
  ExtractionConfig cfg;
  const RootGraph g = run_extract(ph.volume, {32, 32, 2}, cfg);
  for (auto _ : state) {
    benchmark::DoNotOptimize(score(g, ph.graph, 1.0, 5.0));
  }
}
BENCHMARK(BM_Score);

}  // namespace

BENCHMARK_MAIN();
