#include <benchmark/benchmark.h>

#include "common.hpp"

using namespace pwc;

static void BM_QuadraticCompare(benchmark::State& state) {
  const Scalar x = Scalar::quadratic(mpq_class(1393, 985), 0, 2);
  const Scalar y = Scalar::quadratic(0, 1, 2);
  for (auto _ : state) benchmark::DoNotOptimize(x < y);
}
BENCHMARK(BM_QuadraticCompare);

static void BM_QuadraticFloor(benchmark::State& state) {
  const Scalar x = Scalar::quadratic(mpq_class(7, 3), mpq_class(1000003, 17), 5);
  for (auto _ : state) benchmark::DoNotOptimize(x.floor_integer());
}
BENCHMARK(BM_QuadraticFloor);

static void BM_Orbit(benchmark::State& state) {
  const auto g = rotate_compose(bench::family_a(), bench::deep_delta());
  const auto steps = static_cast<std::size_t>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(orbit(g, Scalar::rational(5, 12), steps));
  state.SetItemsProcessed(state.iterations() * state.range(0));
}
BENCHMARK(BM_Orbit)->Arg(100)->Arg(1000);
