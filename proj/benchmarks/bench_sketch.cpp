#include <benchmark/benchmark.h>

#include "bfb/boost.hpp"
#include "bfb/linalg.hpp"
#include "bfb/rng.hpp"
#include "bfb/sketch.hpp"

namespace {

using namespace bfb;

Matrix gaussian_matrix(Index n, Index d, std::uint64_t seed) {
  CounterRng rng(seed);
  Matrix a(n, d);
  for (Index i = 0; i < n; ++i)
    for (Index j = 0; j < d; ++j) a(i, j) = rng.normal();
  return a;
}

void BM_GaussianSketch(benchmark::State& state) {
  const Index n = state.range(0);
  std::uint64_t seed = 0;
  for (auto _ : state) benchmark::DoNotOptimize(gaussian_sketch(n, {SketchKind::gaussian, 100, ++seed}));
}
BENCHMARK(BM_GaussianSketch)->Arg(1000)->Arg(10000);

void BM_LeverageSketch(benchmark::State& state) {
  const Matrix a = gaussian_matrix(state.range(0), 50, 1);
  const LeverageProfile profile = leverage_profile(a);
  std::uint64_t seed = 0;
  for (auto _ : state) benchmark::DoNotOptimize(leverage_sketch(profile, {SketchKind::leverage, 100, ++seed}));
}
BENCHMARK(BM_LeverageSketch)->Arg(1000)->Arg(10000);

void BM_LeveragedVolumeSketch(benchmark::State& state) {
  const Matrix a = gaussian_matrix(1000, state.range(0), 2);
  const OrthoBasis basis = orthonormal_basis(a);
  std::uint64_t seed = 0;
  for (auto _ : state)
    benchmark::DoNotOptimize(leveraged_volume_sketch(basis, {SketchKind::leveraged_volume, 2 * state.range(0), ++seed}));
}
BENCHMARK(BM_LeveragedVolumeSketch)->Arg(5)->Arg(20)->Unit(benchmark::kMillisecond);

void BM_CpqrSketch(benchmark::State& state) {
  const Matrix a = gaussian_matrix(1000, 20, 3);
  for (auto _ : state) benchmark::DoNotOptimize(cpqr_sketch(a, state.range(0)));
}
BENCHMARK(BM_CpqrSketch)->Arg(24)->Arg(40)->Unit(benchmark::kMillisecond);

void BM_SketchedSolve(benchmark::State& state) {
  const Matrix a = gaussian_matrix(1000, 50, 4);
  const LeastSquaresContext ctx(a);
  const Vector b = gaussian_matrix(1000, 1, 5).col(0);
  const SketchOperator s = leverage_sketch(leverage_profile(ctx.basis()), {SketchKind::leverage, 100, 6});
  for (auto _ : state) benchmark::DoNotOptimize(ctx.solve_sketched(b, s));
}
BENCHMARK(BM_SketchedSolve);

void BM_RunBfb(benchmark::State& state) {
  const Matrix a = gaussian_matrix(1000, 20, 7);
  const LeastSquaresContext ctx(a);
  const Vector b = gaussian_matrix(1000, 1, 8).col(0);
  const Vector bt = gaussian_matrix(1000, 1, 9).col(0);
  const LeverageProfile profile = leverage_profile(ctx.basis());
  std::vector<SketchOperator> sketches;
  for (std::uint64_t l = 0; l < static_cast<std::uint64_t>(state.range(0)); ++l)
    sketches.push_back(leverage_sketch(profile, {SketchKind::leverage, 40, l}));
  for (auto _ : state) {
    FidelityPair pair{bt, EntryOracle::from_vector(b)};
    benchmark::DoNotOptimize(run_bfb(ctx, pair, sketches));
  }
}
BENCHMARK(BM_RunBfb)->Arg(1)->Arg(10)->Unit(benchmark::kMicrosecond);

}  // namespace
BENCHMARK_MAIN();
