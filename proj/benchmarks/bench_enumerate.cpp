#include <benchmark/benchmark.h>

#include "topolab/enumerate.hpp"

using namespace topolab;

static void BM_EnumeratePreorder(benchmark::State& state) {
  EnumConfig cfg;
  cfg.n = static_cast<int>(state.range(0));
  cfg.thread_count = static_cast<unsigned>(state.range(1));
  std::uint64_t total = 0;
  for (auto _ : state) {
    total = enumerate_topologies(cfg, [](const Topology& t) { benchmark::DoNotOptimize(t.size()); }).total;
  }
  state.counters["topologies"] = static_cast<double>(total);
  state.counters["per_second"] =
      benchmark::Counter(static_cast<double>(total), benchmark::Counter::kIsIterationInvariantRate);
}
BENCHMARK(BM_EnumeratePreorder)
    ->ArgsProduct({{4, 5, 6}, {1}})
    ->Args({6, 4})
    ->Args({7, 4})
    ->Unit(benchmark::kMillisecond);

static void BM_EnumerateClosureBrute(benchmark::State& state) {
  EnumConfig cfg;
  cfg.n = static_cast<int>(state.range(0));
  cfg.strategy = Strategy::ClosureBrute;
  for (auto _ : state) {
    benchmark::DoNotOptimize(enumerate_topologies(cfg, [](const Topology&) {}).total);
  }
}
BENCHMARK(BM_EnumerateClosureBrute)->DenseRange(2, 4)->Unit(benchmark::kMillisecond);

static void BM_EnumerateIso(benchmark::State& state) {
  EnumConfig cfg;
  cfg.n = static_cast<int>(state.range(0));
  cfg.up_to_iso = true;
  cfg.thread_count = 4;
  for (auto _ : state) {
    benchmark::DoNotOptimize(enumerate_topologies(cfg, [](const Topology&) {}).total);
  }
}
BENCHMARK(BM_EnumerateIso)->DenseRange(4, 6)->Unit(benchmark::kMillisecond);
