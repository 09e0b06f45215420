#include <benchmark/benchmark.h>

#include "bfb/design.hpp"
#include "bfb/rng.hpp"

namespace {

using namespace bfb;

// Per-draw cost of the structured sampler; args are (q, nodes per dimension).
void BM_KronLeverageDraw(benchmark::State& state) {
  const Index q = state.range(0);
  const StructuredDesign d = build_design(std::vector<Index>(static_cast<std::size_t>(q), state.range(1)),
                                          index_set(q, 4, SpaceKind::hyperbolic_cross));
  const KronLeverageSampler sampler(d);
  CounterRng rng(1);
  for (auto _ : state) benchmark::DoNotOptimize(sampler.draw(rng));
  state.counters["N"] = static_cast<double>(d.rows());
}
BENCHMARK(BM_KronLeverageDraw)->Args({2, 10})->Args({2, 100})->Args({2, 1000})->Args({4, 10})->Args({4, 30});

void BM_KronLeverageSample(benchmark::State& state) {
  const StructuredDesign d = build_design({10, 10, 10, 10}, index_set(4, 4, SpaceKind::hyperbolic_cross));
  const KronLeverageSampler sampler(d);
  std::uint64_t seed = 0;
  for (auto _ : state) benchmark::DoNotOptimize(sampler.sample(state.range(0), ++seed));
}
BENCHMARK(BM_KronLeverageSample)->Arg(100)->Arg(1000);

void BM_DesignAssembly(benchmark::State& state) {
  const Index nodes = state.range(0);
  for (auto _ : state) {
    const StructuredDesign d = build_design({nodes, nodes}, index_set(2, 4, SpaceKind::total_degree));
    benchmark::DoNotOptimize(d.assembled().data());
  }
}
BENCHMARK(BM_DesignAssembly)->Arg(10)->Arg(100)->Unit(benchmark::kMicrosecond);

void BM_GaussLegendre(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(gauss_legendre_rule(state.range(0)));
}
BENCHMARK(BM_GaussLegendre)->Arg(10)->Arg(100);

}  // namespace
