#include "doctest.h"

#include "semidelta/enumerate.hpp"
#include "semidelta/green.hpp"
#include "test_helpers.hpp"

using namespace semidelta;
using namespace sdt;

namespace {

ElemSet set_of(std::initializer_list<int> xs) {
  ElemSet s;
  for (int x : xs) s.insert(x);
  return s;
}

}  // namespace

TEST_SUITE("green") {

TEST_CASE("principal ideals") {
  CayleyTable n3 = nil3();
  CHECK(principal_ideal(n3, 1) == set_of({0, 1, 2}));
  CHECK(principal_ideal(n3, 2) == set_of({0, 2}));
  CHECK(principal_ideal(n3, 0) == set_of({0}));
  for (int a = 0; a < 4; ++a) CHECK(principal_ideal(cyclic_group(4), a) == ElemSet::full(4));
}

TEST_CASE("j-classes") {
  CHECK(j_class(nil3(), 1) == set_of({1}));
  CHECK(j_class(right_zero(2), 0) == set_of({0, 1}));
  CHECK(j_class(CayleyTable(1, {0}), 0) == set_of({0}));
}

TEST_CASE("i-sets") {
  CHECK(i_set(nil3(), 1) == set_of({0, 2}));
  CHECK(i_set(nil3(), 0).empty());
  CHECK(i_set(b0(), 0) == set_of({2}));  // zero sits below the band pair
}

TEST_CASE("ideal chain test") {
  CHECK(ideals_form_chain(nil3()).chain);
  CHECK(ideals_form_chain(klein4()).chain);  // groups have no proper ideals

  ChainCheck sq = ideals_form_chain(square_semilattice());
  CHECK(!sq.chain);
  REQUIRE(sq.witness.has_value());
  auto [a, b] = *sq.witness;
  ElemSet ia = principal_ideal(square_semilattice(), a), ib = principal_ideal(square_semilattice(), b);
  CHECK(!ia.subset_of(ib));
  CHECK(!ib.subset_of(ia));
}

TEST_CASE("chain test agrees with the all-ideals oracle (orders <= 4, canonical corpus)") {
  for (int n = 1; n <= 4; ++n)
    for (const CayleyTable& t : all_semigroups(n)) {
      auto ideals = oracle_all_ideals(t);
      bool oracle_chain = true;
      for (std::size_t i = 0; i < ideals.size() && oracle_chain; ++i)
        for (std::size_t j = i + 1; j < ideals.size(); ++j)
          if (!ideals[i].subset_of(ideals[j]) && !ideals[j].subset_of(ideals[i])) {
            oracle_chain = false;
            break;
          }
      CHECK(ideals_form_chain(t).chain == oracle_chain);
    }
}

TEST_CASE("structure invariants over the corpus (orders <= 4)") {
  for (int n = 1; n <= 4; ++n)
    for (const CayleyTable& t : all_semigroups(n)) {
      for (int a = 0; a < n; ++a) {
        ElemSet ja = principal_ideal(t, a);
        CHECK(ja.contains(a));
        CHECK(is_ideal(t, ja));
        ja.for_each([&](int b) { CHECK(principal_ideal(t, b).subset_of(ja)); });
        ElemSet ia = i_set(t, a);
        if (!ia.empty()) CHECK(is_ideal(t, ia));
      }
    }
}

TEST_CASE("j-structure is topologically ordered") {
  JStructure js = j_structure(nil3());
  CHECK(js.j_classes.size() == 3);
  CHECK(js.chain_ordered);
  // Smaller ideals first; inclusion respects id order.
  for (std::size_t i = 0; i + 1 < js.class_ideal.size(); ++i)
    CHECK(js.class_ideal[i].size() <= js.class_ideal[i + 1].size());
  for (std::size_t i = 0; i < js.class_ideal.size(); ++i)
    for (std::size_t j = 0; j < js.class_ideal.size(); ++j)
      if (js.class_ideal[i].subset_of(js.class_ideal[j]) && !(js.class_ideal[i] == js.class_ideal[j]))
        CHECK(i < j);

  JStructure rz = j_structure(right_zero(2));
  CHECK(rz.j_classes.size() == 1);
  CHECK(rz.j_class_of[0] == rz.j_class_of[1]);
}

}  // TEST_SUITE
