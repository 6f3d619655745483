// Scratch: compute oracle values to freeze into tests. Not part of the build.
#include <cstdio>
#include <functional>
#include <algorithm>

#include "tests/test_helpers.hpp"
#include "semidelta/errors.hpp"
#include "semidelta/properties.hpp"
#include "semidelta/congruence.hpp"
#include "semidelta/green.hpp"
#include "semidelta/structure.hpp"

using namespace semidelta;
using namespace sdt;

int main() {
  // Associative table counts.
  for (int n = 1; n <= 3; ++n) {
    auto labeled = oracle_all_associative_tables(n);
    std::printf("order %d: labeled=%zu up_to_iso=%zu\n", n, labeled.size(), oracle_count_up_to_iso(n));
  }

  // Permutative witness for RZ2 and LZ2.
  for (auto [name, t] : {std::pair{"RZ2", right_zero(2)}, std::pair{"LZ2", left_zero(2)}}) {
    auto pc = is_permutative(t, 4);
    std::printf("%s permutative: holds=%d degree=%d sigma=", name, pc.holds, pc.degree);
    for (int s : pc.permutation) std::printf("%d", s);
    std::printf("\n");
  }

  // Near-miss fixture:条件 and propositions.
  CayleyTable nm = near_miss5();
  auto decs = find_t2_decompositions(nm);
  std::printf("near_miss5 candidates: %zu\n", decs.size());
  for (const auto& d : decs) {
    std::printf("  kind=%s u=%d v=%d s0=", to_string(d.kind).c_str(), d.u, d.v);
    for (int x : d.s0.to_vector()) std::printf("%d", x);
    std::printf(" nil=%d nontriv=%d law=%d into=%d delta=%d\n", d.flags.s0_nil, d.flags.s0_nontrivial,
                d.flags.s1_law_ok, d.flags.products_into_s0, d.flags.is_delta);
    if (d.kind == TKind::T2R) {
      auto rep = t2r_condition_report(nm, d, true);
      for (int i = 0; i < 5; ++i)
        std::printf("    corrected c%d holds=%d vacuous=%d\n", i + 1, rep.conditions[i].holds,
                    rep.conditions[i].vacuous);
      auto rep2 = t2r_condition_report(nm, d, false);
      for (int i = 0; i < 5; ++i)
        std::printf("    uncorrected c%d holds=%d vacuous=%d\n", i + 1, rep2.conditions[i].holds,
                    rep2.conditions[i].vacuous);
      auto nec = t2r_necessary_propositions(nm, d);
      auto vstr = [](const CheckOutcome& c) {
        return c.verdict == CheckOutcome::Verdict::pass ? "pass"
               : c.verdict == CheckOutcome::Verdict::fail ? "fail" : "vacuous";
      };
      std::printf("    P2=%s C3=%s P4=%s P6=%s", vstr(nec.p2), vstr(nec.c3), vstr(nec.p4), vstr(nec.p6));
      std::printf(" P6w=");
      for (int w : nec.p6.witness) std::printf("%d,", w);
      std::printf(" P7=%s P7w=", vstr(nec.p7));
      for (int w : nec.p7.witness) std::printf("%d,", w);
      std::printf(" degenerate=%d\n", nec.degenerate);
    }
  }

  // Classification of the small fixtures.
  auto show = [](const char* name, const CayleyTable& t) {
    auto r = classify_we_delta(t);
    std::printf("%s -> %s", name, to_string(r.tmpl).c_str());
    if (r.p) std::printf(" p=%d", *r.p);
    if (r.k) std::printf(" k=%d", *r.k);
    std::printf("\n");
  };
  show("trivial", CayleyTable(1, {0}));
  show("Z2", cyclic_group(2));
  show("Z4", cyclic_group(4));
  show("Z6", cyclic_group(6));
  show("N3", nil3());
  show("B0", b0());
  show("B1", b1());
  show("RZ2", right_zero(2));
  show("LZ2", left_zero(2));
  show("N2^1", null2_with_identity());
  show("Z2^0", adjoin_zero(cyclic_group(2)));

  // Z6 congruence count; B0 rees by {zero}.
  std::printf("Z6 congruences: %zu\n", all_congruences(cyclic_group(6)).size());
  auto q = rees_quotient(b0(), ElemSet::single(2));
  std::printf("B0/{zero} order=%d\n", q.table.order());

  // First failing triple of the spec's non-associative 2x2 example.
  try {
    CayleyTable bad(2, {1, 0, 0, 0});
  } catch (const AssociativityViolation& e) {
    std::printf("bad table witness: (%d,%d,%d)\n", e.a, e.b, e.c);
  }
  return 0;
}
