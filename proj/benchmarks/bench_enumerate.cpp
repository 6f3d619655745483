#include <benchmark/benchmark.h>

#include "semidelta/enumerate.hpp"
#include "semidelta/t2r_search.hpp"

using namespace semidelta;

namespace {

void BM_CountLabeled(benchmark::State& state) {
  EnumerationOptions opts;
  opts.up_to_iso = false;
  for (auto _ : state) benchmark::DoNotOptimize(count_semigroups(static_cast<int>(state.range(0)), opts));
}
BENCHMARK(BM_CountLabeled)->Arg(3)->Arg(4)->Unit(benchmark::kMillisecond);

void BM_CountUpToIso(benchmark::State& state) {
  EnumerationOptions opts;
  opts.threads = static_cast<int>(state.range(1));
  for (auto _ : state) benchmark::DoNotOptimize(count_semigroups(static_cast<int>(state.range(0)), opts));
}
BENCHMARK(BM_CountUpToIso)->Args({4, 1})->Args({5, 1})->Args({5, 4})->Unit(benchmark::kMillisecond);

void BM_SearchT2r(benchmark::State& state) {
  T2rSearchOptions opts;
  opts.max_order = static_cast<int>(state.range(0));
  opts.prune_p6 = opts.prune_p7 = state.range(1) != 0;
  for (auto _ : state) benchmark::DoNotOptimize(search_t2r(opts));
}
BENCHMARK(BM_SearchT2r)->Args({5, 0})->Args({6, 0})->Args({7, 1})->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
