#include <benchmark/benchmark.h>

#include "dzeta/dzeta.hpp"

using namespace dzeta;

static void BM_DeriveStep(benchmark::State& state) {
  ZetaLevel z = artin_elliptic(3, 1);
  const int n = static_cast<int>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(derive_step(z, n));
}
BENCHMARK(BM_DeriveStep)->DenseRange(2, 8, 2)->Unit(benchmark::kMillisecond);

static void BM_DeriveStepNaive(benchmark::State& state) {
  ZetaLevel z = artin_elliptic(3, 1);
  const int n = static_cast<int>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(derive_step_naive(z, n));
}
BENCHMARK(BM_DeriveStepNaive)->DenseRange(2, 6, 2)->Unit(benchmark::kMillisecond);

static void BM_DeriveTowerSecondLevel(benchmark::State& state) {
  CurveSpec c = CurveSpec::elliptic(5, -3);
  for (auto _ : state) benchmark::DoNotOptimize(derive_tower(c, {2, 3}, false));
}
BENCHMARK(BM_DeriveTowerSecondLevel)->Unit(benchmark::kMillisecond);

static void BM_PolyGcd(benchmark::State& state) {
  const int d = static_cast<int>(state.range(0));
  Poly common = Poly::one_minus(BigRat(3));
  Poly a = common, b = common;
  for (int i = 1; i <= d; ++i) {
    a = a * Poly({BigRat(i), BigRat(1), BigRat(2 * i + 1)});
    b = b * Poly({BigRat(-i), BigRat(i + 2)});
  }
  for (auto _ : state) benchmark::DoNotOptimize(poly_gcd(a, b));
}
BENCHMARK(BM_PolyGcd)->RangeMultiplier(2)->Range(2, 16);

static void BM_SeriesExp(benchmark::State& state) {
  const int K = static_cast<int>(state.range(0));
  FormalSeries g(K);
  for (int k = 1; k <= K; ++k) g[k] = BigRat(mpz_class(k + 2), mpz_class(k * k + 1));
  for (auto _ : state) benchmark::DoNotOptimize(series_exp(g));
}
BENCHMARK(BM_SeriesExp)->RangeMultiplier(2)->Range(8, 64);

static void BM_RhNumeric(benchmark::State& state) {
  InvariantSet inv = extract_invariants(derive_step(artin_from_point_counts(2, 2, {3, 5}), 2));
  RHNumericOptions opt;
  opt.precision_bits = static_cast<int>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(rh_numeric(inv, opt));
}
BENCHMARK(BM_RhNumeric)->Arg(128)->Arg(256)->Arg(512)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
