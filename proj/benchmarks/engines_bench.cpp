#include <benchmark/benchmark.h>

#include "lzl/generators.hpp"
#include "lzl/grid_sweep.hpp"
#include "lzl/iso.hpp"
#include "lzl/prox.hpp"
#include "lzl/zeta.hpp"

using namespace lzl;

static void BM_IsoProfilesGrid(benchmark::State& state) {
  const Graph g = grid_graph(static_cast<std::size_t>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(iso_profiles(g));
}
BENCHMARK(BM_IsoProfilesGrid)->Arg(3)->Arg(4)->Unit(benchmark::kMillisecond);

static void BM_ProxNumberGrid(benchmark::State& state) {
  const Graph g = grid_graph(static_cast<std::size_t>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(prox_number(g));
}
BENCHMARK(BM_ProxNumberGrid)->Arg(3)->Arg(4)->Unit(benchmark::kMillisecond);

static void BM_ZetaNumberSpider(benchmark::State& state) {
  const Graph g = spider_graph({3, 3, 3});
  for (auto _ : state) benchmark::DoNotOptimize(zeta_number(g));
}
BENCHMARK(BM_ZetaNumberSpider)->Unit(benchmark::kMillisecond);

static void BM_ZetaNumberComplete(benchmark::State& state) {
  const Graph g = complete_graph(static_cast<std::size_t>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(zeta_number(g));
}
BENCHMARK(BM_ZetaNumberComplete)->Arg(5)->Arg(7)->Unit(benchmark::kMillisecond);

static void BM_GridSweepVerify(benchmark::State& state) {
  const long n = state.range(0);
  const ProbeSchedule s = clip_schedule(five_panel_schedule(n), n);
  const Graph g = grid_graph(static_cast<std::size_t>(n), Caps::kMaxVertices);
  for (auto _ : state) benchmark::DoNotOptimize(run_schedule(g, s));
}
BENCHMARK(BM_GridSweepVerify)->Arg(11)->Arg(26)->Unit(benchmark::kMillisecond);
BENCHMARK_MAIN();
