#include <benchmark/benchmark.h>

#include "common.hpp"
#include "pwc/badic.hpp"

using namespace pwc;

static void BM_Certify(benchmark::State& state) {
  const auto g = rotate_compose(bench::family_a(), bench::deep_delta());
  const auto depth = static_cast<std::size_t>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(certify(g, depth));
}
BENCHMARK(BM_Certify)->Arg(20)->Arg(60)->Arg(120);

static void BM_FactorCount(benchmark::State& state) {
  const auto g = rotate_compose(bench::family_a(), bench::deep_delta());
  const Word w = natural_coding(g, Scalar::rational(5, 12), 99999).word;
  const auto k = static_cast<std::size_t>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(factor_count(w, k));
}
BENCHMARK(BM_FactorCount)->Arg(10)->Arg(60);

static void BM_GeometricComplexity(benchmark::State& state) {
  const auto g = rotate_compose(bench::family_a(), bench::deep_delta());
  for (auto _ : state) benchmark::DoNotOptimize(geometric_complexity(g, 60));
}
BENCHMARK(BM_GeometricComplexity);

static void BM_GapWords(benchmark::State& state) {
  const auto fam = bench::family_a();
  const Scalar delta = bench::deep_delta();
  for (auto _ : state) benchmark::DoNotOptimize(gap_words(fam, delta, 64));
}
BENCHMARK(BM_GapWords);
