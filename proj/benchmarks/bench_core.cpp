#include <cmath>

#include <benchmark/benchmark.h>

#include "orthobound/bounds.hpp"
#include "orthobound/hermite.hpp"
#include "orthobound/pswf.hpp"
#include "orthobound/sphere_codes.hpp"

using namespace orthobound;

static void BM_HermiteBasis(benchmark::State& state) {
  const Grid grid(16.0, static_cast<std::size_t>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(build_hermite_basis(20, grid));
}
BENCHMARK(BM_HermiteBasis)->Arg(1024)->Arg(4096)->Arg(16384)->Unit(benchmark::kMillisecond);

static void BM_ProlateEigenvalues(benchmark::State& state) {
  const double T = static_cast<double>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(prolate_eigenvalues(T, T, static_cast<int>(4 * T * T) + 10));
}
BENCHMARK(BM_ProlateEigenvalues)->Arg(1)->Arg(2)->Arg(4)->Unit(benchmark::kMicrosecond);

static void BM_PswfBasis(benchmark::State& state) {
  const Grid grid;
  for (auto _ : state) benchmark::DoNotOptimize(build_pswf_basis(2.0, 2.0, 20, grid));
}
BENCHMARK(BM_PswfBasis)->Unit(benchmark::kMillisecond);

static void BM_CodeBound(benchmark::State& state) {
  const CodeBoundQuery q{0.02, state.range(0), Field::complex};
  for (auto _ : state) benchmark::DoNotOptimize(code_upper_bound(q));
}
BENCHMARK(BM_CodeBound)->Arg(10)->Arg(1000)->Arg(1 << 30);

static void BM_GreedyCode(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(greedy_code(0.3, static_cast<int>(state.range(0)), Field::real, 600, 1));
}
BENCHMARK(BM_GreedyCode)->Arg(4)->Arg(8)->Unit(benchmark::kMillisecond);

static void BM_UmbrellaGaussian(benchmark::State& state) {
  const Envelope e = Envelope::gaussian(1.0, std::pow(2.0, 0.25));
  for (auto _ : state) benchmark::DoNotOptimize(umbrella_bound(e, e));
}
BENCHMARK(BM_UmbrellaGaussian);

static void BM_PowerLawBound(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(power_law_bound(2.0, std::sqrt(1.5)));
}
BENCHMARK(BM_PowerLawBound);
BENCHMARK_MAIN();
