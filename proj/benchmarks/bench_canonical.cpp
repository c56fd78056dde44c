#include <benchmark/benchmark.h>

#include <vector>

#include "topolab/enumerate.hpp"
#include "topolab/topology.hpp"

using namespace topolab;

namespace {

std::vector<Topology> sample(int n, std::size_t stride) {
  EnumConfig cfg;
  cfg.n = n;
  std::vector<Topology> out;
  std::size_t i = 0;
  enumerate_topologies(cfg, [&](const Topology& t) {
    if (i++ % stride == 0) out.push_back(t);
  });
  return out;
}

}  // namespace

static void BM_CanonicalForm(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  const auto topologies = sample(n, n <= 5 ? 1 : 97);
  std::size_t i = 0;
  for (auto _ : state) {
    benchmark::DoNotOptimize(canonical_form(topologies[i++ % topologies.size()]));
  }
}
BENCHMARK(BM_CanonicalForm)->DenseRange(4, 7);

static void BM_IsCanonical(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  const auto topologies = sample(n, n <= 5 ? 1 : 97);
  std::size_t i = 0;
  for (auto _ : state) {
    benchmark::DoNotOptimize(is_canonical(topologies[i++ % topologies.size()]));
  }
}
BENCHMARK(BM_IsCanonical)->DenseRange(4, 7);
