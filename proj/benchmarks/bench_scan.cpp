#include <benchmark/benchmark.h>

#include "common.hpp"
#include "pwc/scan.hpp"
#include "pwc/semiconj.hpp"

using namespace pwc;

static void BM_Scan(benchmark::State& state) {
  const auto fam = bench::family_a();
  ScanConfig cfg;
  cfg.denominator = 4096;
  cfg.depth = 20;
  cfg.word_depth = 0;
  cfg.jobs = static_cast<unsigned>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(run_scan(fam, cfg));
  state.SetItemsProcessed(state.iterations() * 4096);
}
BENCHMARK(BM_Scan)->Arg(1)->Arg(4)->UseRealTime()->Unit(benchmark::kMillisecond);

static void BM_Semiconjugacy(benchmark::State& state) {
  const auto g = rotate_compose(bench::family_a(), bench::deep_delta());
  SemiconjugacyOptions opt;
  opt.samples = static_cast<std::size_t>(state.range(0));
  opt.k_iter = 60;
  opt.grid = 4096;
  for (auto _ : state) benchmark::DoNotOptimize(estimate_semiconjugacy(g, opt));
}
BENCHMARK(BM_Semiconjugacy)->Arg(10000)->Unit(benchmark::kMillisecond);
