#include <benchmark/benchmark.h>

#include "semidelta/congruence.hpp"

using namespace semidelta;

namespace {

CayleyTable cyclic_group(int n) {
  std::vector<int> e(static_cast<std::size_t>(n) * n);
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b) e[static_cast<std::size_t>(a) * n + b] = (a + b) % n;
  return CayleyTable::trusted(n, std::move(e));
}

CayleyTable left_zero(int n) {
  std::vector<int> e(static_cast<std::size_t>(n) * n);
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b) e[static_cast<std::size_t>(a) * n + b] = a;
  return CayleyTable::trusted(n, std::move(e));
}

void BM_PrincipalCongruence(benchmark::State& state) {
  CayleyTable t = cyclic_group(static_cast<int>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(principal_congruence(t, 0, 1));
}
BENCHMARK(BM_PrincipalCongruence)->Arg(8)->Arg(16)->Arg(32);

void BM_IsDelta(benchmark::State& state) {
  CayleyTable t = cyclic_group(static_cast<int>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(is_delta(t));
}
BENCHMARK(BM_IsDelta)->Arg(8)->Arg(12)->Arg(16);

// Left-zero semigroups have every equivalence as a congruence, so the
// lattice is the full partition lattice: the worst case for closure.
void BM_AllCongruencesLeftZero(benchmark::State& state) {
  CayleyTable t = left_zero(static_cast<int>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(all_congruences(t));
}
BENCHMARK(BM_AllCongruencesLeftZero)->Arg(5)->Arg(6)->Arg(7);

}  // namespace

BENCHMARK_MAIN();
