#include <cstdio>
#include "semidelta/enumerate.hpp"
#include "semidelta/structure.hpp"
#include "semidelta/green.hpp"
#include <chrono>
using namespace semidelta;
int main() {
  auto t0 = std::chrono::steady_clock::now();
  auto corpus = all_semigroups(5, true, 4);
  auto t1 = std::chrono::steady_clock::now();
  std::printf("order-5 corpus: %zu tables in %.1fs\n", corpus.size(),
              std::chrono::duration<double>(t1 - t0).count());
  int instances = 0, cands12 = 0;
  for (const auto& t : corpus)
    for (const auto& d : find_t2_decompositions(t)) {
      if (d.kind != TKind::T2R) continue;
      auto rep = t2r_condition_report(t, d);
      if (!rep.conditions[0].holds || !rep.conditions[1].holds) continue;
      ++cands12;
      d.s0.for_each([&](int b) {
        if (j_class(t, b).size() != 2) return;
        if (i_set(t, b).empty()) return;
        ++instances;
      });
    }
  std::printf("candidates passing (1)+(2): %d; rees-reduction instances: %d\n", cands12, instances);
  auto t2 = std::chrono::steady_clock::now();
  std::printf("sweep took %.1fs\n", std::chrono::duration<double>(t2 - t1).count());
}
