#include <benchmark/benchmark.h>

#include <numeric>
#include <random>

#include "semidelta/enumerate.hpp"

using namespace semidelta;

namespace {

// Monogenic nilpotent table of the given order, scrambled by a fixed
// permutation so canonicalization has real work to do.
CayleyTable scrambled_nil(int n, unsigned seed) {
  std::vector<int> e(static_cast<std::size_t>(n) * n, 0);
  for (int a = 1; a < n; ++a)
    for (int b = 1; b < n; ++b)
      if (a + b < n) e[static_cast<std::size_t>(a) * n + b] = a + b;
  CayleyTable t = CayleyTable::trusted(n, std::move(e));
  std::vector<int> perm(static_cast<std::size_t>(n));
  std::iota(perm.begin(), perm.end(), 0);
  std::mt19937 rng(seed);
  std::shuffle(perm.begin(), perm.end(), rng);
  return relabel(t, perm);
}

void BM_CanonicalForm(benchmark::State& state) {
  CayleyTable t = scrambled_nil(static_cast<int>(state.range(0)), 7);
  for (auto _ : state) benchmark::DoNotOptimize(canonical_form(t));
}
BENCHMARK(BM_CanonicalForm)->Arg(5)->Arg(6)->Arg(7)->Arg(8);

void BM_IsCanonical(benchmark::State& state) {
  CayleyTable t = scrambled_nil(static_cast<int>(state.range(0)), 7);
  for (auto _ : state) benchmark::DoNotOptimize(is_canonical(t));
}
BENCHMARK(BM_IsCanonical)->Arg(6)->Arg(7)->Arg(8);

}  // namespace

BENCHMARK_MAIN();
