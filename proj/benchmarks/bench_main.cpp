#include <benchmark/benchmark.h>

#include "optdom/closed_form.hpp"
#include "optdom/operators.hpp"
#include "optdom/radial.hpp"
#include "optdom/suite.hpp"

using namespace optdom;

static void BM_CauchyProduct(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  PolynomialSampler s(1);
  const auto a = s.next_exact(n), b = s.next_exact(n);
  for (auto _ : state) benchmark::DoNotOptimize(cauchy_product(a, b, n));
  state.SetComplexityN(state.range(0));
}
BENCHMARK(BM_CauchyProduct)->RangeMultiplier(2)->Range(32, 512)->Complexity();

static void BM_Volterra(benchmark::State& state) {
  const auto gp = TruncatedSeries::ones(kDefaultDegree);
  const auto f = PolynomialSampler(2).next_exact(64);
  for (auto _ : state) benchmark::DoNotOptimize(volterra(gp, f));
}
BENCHMARK(BM_Volterra);

static void BM_Taylor(benchmark::State& state) {
  const Expr e = catalog("e1_witness", {1.5});
  for (auto _ : state) benchmark::DoNotOptimize(taylor(e, static_cast<std::size_t>(state.range(0))));
}
BENCHMARK(BM_Taylor)->Arg(64)->Arg(256);

static void BM_ProfileExpr(benchmark::State& state) {
  const auto f = as_function(catalog("propJ_witness", {1.0}));
  for (auto _ : state) benchmark::DoNotOptimize(radial_profile(f, Weight::power(1.0), RadialGrid{}));
}
BENCHMARK(BM_ProfileExpr)->Unit(benchmark::kMillisecond);

static void BM_ProfileSeries(benchmark::State& state) {
  const auto f = as_function(PolynomialSampler(3).next_exact(static_cast<std::size_t>(state.range(0))));
  for (auto _ : state) benchmark::DoNotOptimize(radial_profile(f, Weight::power(1.0), RadialGrid{}));
}
BENCHMARK(BM_ProfileSeries)->Arg(64)->Arg(256)->Unit(benchmark::kMillisecond);

static void BM_Classify(benchmark::State& state) {
  const auto f = as_function(catalog("pow_witness", {1.25}));
  for (auto _ : state) benchmark::DoNotOptimize(classify_membership(f, 1.0, RadialGrid{}));
}
BENCHMARK(BM_Classify)->Unit(benchmark::kMillisecond);

static void BM_PathIntegral(benchmark::State& state) {
  const Expr gp = catalog("g0prime");
  const Expr f = catalog("pow_witness", {1.0});
  for (auto _ : state) benchmark::DoNotOptimize(path_integral_volterra(gp, f, 0.999));
}
BENCHMARK(BM_PathIntegral);

static void BM_RunAll(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(run_all(SuiteConfig{}));
}
BENCHMARK(BM_RunAll)->Unit(benchmark::kSecond)->Iterations(1);
BENCHMARK_MAIN();
