#include <benchmark/benchmark.h>

#include "pfcy/bundles.hpp"
#include "pfcy/chow.hpp"
#include "pfcy/groebner.hpp"
#include "pfcy/invariants.hpp"
#include "pfcy/models.hpp"
#include "pfcy/pfaffian.hpp"

using namespace pfcy;

static void BM_PolynomialProduct(benchmark::State& state) {
  const PrimeField F;
  SplitMix64 rng(1);
  const Polynomial a = random_homogeneous(F, 7, static_cast<int>(state.range(0)), rng);
  const Polynomial b = random_homogeneous(F, 7, static_cast<int>(state.range(0)), rng);
  for (auto _ : state) benchmark::DoNotOptimize(a * b);
}
BENCHMARK(BM_PolynomialProduct)->Arg(2)->Arg(3)->Arg(4)->Unit(benchmark::kMicrosecond);

static void BM_PfaffianExpansion(benchmark::State& state) {
  const SkewPolyMatrix M = random_section(DegreePattern::uniform(static_cast<int>(state.range(0)), 1), 1, PrimeField());
  for (auto _ : state) benchmark::DoNotOptimize(sub_pfaffians(M, static_cast<int>(state.range(0) - 1) / 2));
}
BENCHMARK(BM_PfaffianExpansion)->Arg(5)->Arg(7)->Unit(benchmark::kMillisecond);

static void BM_GroebnerModel(benchmark::State& state, const char* name) {
  const Model m = build_model(name, 1);
  for (auto _ : state) benchmark::DoNotOptimize(buchberger(m.ideal.generators()).elements.size());
}
BENCHMARK_CAPTURE(BM_GroebnerModel, ci12, "ci-12")->Unit(benchmark::kMillisecond);
BENCHMARK_CAPTURE(BM_GroebnerModel, pf13, "pf-13")->Unit(benchmark::kMillisecond);
BENCHMARK_CAPTURE(BM_GroebnerModel, pf14, "pf-14")->Unit(benchmark::kMillisecond)->Iterations(1);

static void BM_Saturation(benchmark::State& state) {
  const Model m = build_model("x11", 1);
  for (auto _ : state) benchmark::DoNotOptimize(saturate(m.ideal, 1).generators().size());
}
BENCHMARK(BM_Saturation)->Unit(benchmark::kMillisecond)->Iterations(1);

static void BM_SingularScheme(benchmark::State& state) {
  const Model m = build_model("ci-12", 1);
  for (auto _ : state) benchmark::DoNotOptimize(node_count(m.ideal.with_saturated_flag(true), 1).degree);
}
BENCHMARK(BM_SingularScheme)->Unit(benchmark::kMillisecond)->Iterations(1);

static void BM_Enumeration(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(enumerate_classification(static_cast<int>(state.range(0))).candidates);
}
BENCHMARK(BM_Enumeration)->DenseRange(2, 5)->Unit(benchmark::kMillisecond);

static void BM_ClassSolver(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(fibered_classes(fiber_degrees(2)).size());
}
BENCHMARK(BM_ClassSolver)->Unit(benchmark::kMillisecond);
BENCHMARK_MAIN();
