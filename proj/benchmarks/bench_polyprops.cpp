#include <benchmark/benchmark.h>

#include "topolab/polyprops.hpp"
#include "topolab/topology.hpp"

using namespace topolab;

// Real-rooted input: the worst case for the Sturm chain, which runs to the end.
static void BM_RealRootedBinomial(benchmark::State& state) {
  const CoeffSeq row = expand_binomial_product(PartitionType({static_cast<int>(state.range(0))}));
  for (auto _ : state) benchmark::DoNotOptimize(is_real_rooted(row));
}
BENCHMARK(BM_RealRootedBinomial)->DenseRange(4, 16, 4);

static void BM_RealRootedPartitionProduct(benchmark::State& state) {
  // alpha = (1, 1, 1, ...): distinct block sizes 1..k
  std::vector<int> alpha(static_cast<std::size_t>(state.range(0)), 1);
  const CoeffSeq p = expand_binomial_product(PartitionType(alpha));
  for (auto _ : state) benchmark::DoNotOptimize(is_real_rooted(p));
}
BENCHMARK(BM_RealRootedPartitionProduct)->DenseRange(2, 5);

static void BM_NewtonCheck(benchmark::State& state) {
  const CoeffSeq row = expand_binomial_product(PartitionType({static_cast<int>(state.range(0))}));
  for (auto _ : state) benchmark::DoNotOptimize(newton_check(row));
}
BENCHMARK(BM_NewtonCheck)->DenseRange(4, 16, 4);

static void BM_OpenPolynomial(benchmark::State& state) {
  const Topology t = discrete_topology(static_cast<int>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(open_polynomial(t));
}
BENCHMARK(BM_OpenPolynomial)->DenseRange(4, 12, 4);
