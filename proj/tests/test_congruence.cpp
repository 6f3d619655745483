#include "doctest.h"

#include <random>

#include "semidelta/congruence.hpp"
#include "semidelta/errors.hpp"
#include "test_helpers.hpp"

using namespace semidelta;
using namespace sdt;

namespace {

Partition make_partition(int n, std::vector<std::vector<int>> classes) {
  std::vector<int> map(static_cast<std::size_t>(n));
  for (const auto& cls : classes)
    for (int x : cls) map[static_cast<std::size_t>(x)] = cls[0];
  return Partition::from_class_map(std::move(map));
}

bool lattice_is_chain(const std::vector<Partition>& lattice) {
  for (std::size_t i = 0; i < lattice.size(); ++i)
    for (std::size_t j = i + 1; j < lattice.size(); ++j)
      if (compare_partitions(lattice[i], lattice[j]) == PartitionOrder::incomparable) return false;
  return true;
}

}  // namespace

TEST_SUITE("congruence") {

TEST_CASE("principal congruences") {
  CayleyTable z4 = cyclic_group(4);
  CHECK(principal_congruence(z4, 0, 2) == make_partition(4, {{0, 2}, {1, 3}}));
  CHECK(principal_congruence(z4, 1, 1) == Partition::identity(4));
  CHECK(principal_congruence(right_zero(2), 0, 1) == Partition::universal(2));
}

TEST_CASE("generated congruences") {
  CayleyTable z4 = cyclic_group(4);
  std::vector<std::pair<int, int>> one = {{0, 2}};
  CHECK(congruence_generated_by(z4, one) == principal_congruence(z4, 0, 2));
  std::vector<std::pair<int, int>> collapse = {{0, 1}};
  CHECK(congruence_generated_by(z4, collapse) == Partition::universal(4));
  CHECK(congruence_generated_by(z4, {}) == Partition::identity(4));
}

TEST_CASE("all_congruences against the partition-scan oracle (order <= 3 corpus)") {
  for (int n = 1; n <= 3; ++n)
    for (const auto& e : oracle_all_associative_tables(n)) {
      CayleyTable t(n, e);
      auto fast = all_congruences(t);
      auto slow = oracle_all_congruences(t);
      std::sort(slow.begin(), slow.end());
      REQUIRE(fast.size() == slow.size());
      CHECK(fast == slow);
    }
}

TEST_CASE("congruence lattices of the fixtures") {
  CHECK(all_congruences(cyclic_group(4)).size() == 3);
  CHECK(all_congruences(cyclic_group(6)).size() == 4);
  CHECK(all_congruences(CayleyTable(1, {0})).size() == 1);

  // Lattice sanity: identity and universal present, join-closed.
  for (const CayleyTable& t : {cyclic_group(6), b0(), nil3(), square_semilattice()}) {
    auto lattice = all_congruences(t);
    CHECK(std::find(lattice.begin(), lattice.end(), Partition::identity(t.order())) != lattice.end());
    CHECK(std::find(lattice.begin(), lattice.end(), Partition::universal(t.order())) != lattice.end());
    for (const auto& p : lattice)
      for (const auto& q : lattice) {
        Partition j = join_congruences(t, p, q);
        CHECK(std::find(lattice.begin(), lattice.end(), j) != lattice.end());
      }
  }

  CHECK_THROWS_AS(all_congruences(cyclic_group(6), 5), SizeLimitExceeded);
}

TEST_CASE("partition comparison") {
  CHECK(compare_partitions(Partition::identity(4), Partition::universal(4)) == PartitionOrder::finer);
  CHECK(compare_partitions(Partition::universal(4), Partition::identity(4)) == PartitionOrder::coarser);
  Partition mod2 = make_partition(6, {{0, 2, 4}, {1, 3, 5}});
  Partition mod3 = make_partition(6, {{0, 3}, {1, 4}, {2, 5}});
  CHECK(compare_partitions(mod2, mod3) == PartitionOrder::incomparable);
  CHECK(compare_partitions(mod2, mod2) == PartitionOrder::equal);
  CHECK_THROWS_AS(compare_partitions(Partition::identity(2), Partition::identity(3)), OrderMismatch);
}

TEST_CASE("delta recognition") {
  CHECK(is_delta(cyclic_group(4)).is_delta);
  CHECK(is_delta(right_zero(2)).is_delta);

  DeltaCheck z6 = is_delta(cyclic_group(6));
  CHECK(!z6.is_delta);
  REQUIRE(z6.witness.has_value());
  auto [pa, pb] = *z6.witness;
  CHECK(compare_partitions(pa, pb) == PartitionOrder::incomparable);
  CHECK(is_congruence(cyclic_group(6), pa));
  CHECK(is_congruence(cyclic_group(6), pb));
}

TEST_CASE("fast delta equals the full lattice chain test (order <= 3 corpus)") {
  for (int n = 1; n <= 3; ++n)
    for (const auto& e : oracle_all_associative_tables(n)) {
      CayleyTable t(n, e);
      CHECK(is_delta(t).is_delta == lattice_is_chain(oracle_all_congruences(t)));
    }
}

TEST_CASE("principal and left-kernel outputs are congruences (order <= 3 corpus)") {
  for (int n = 1; n <= 3; ++n)
    for (const auto& e : oracle_all_associative_tables(n)) {
      CayleyTable t(n, e);
      for (int a = 0; a < n; ++a)
        for (int b = a + 1; b < n; ++b) CHECK(oracle_is_congruence(t, principal_congruence(t, a, b)));
      CHECK(oracle_is_congruence(t, left_kernel_congruence(t)));
    }
}

TEST_CASE("left kernel congruence") {
  CHECK(left_kernel_congruence(right_zero(2)) == Partition::identity(2));
  CHECK(left_kernel_congruence(left_zero(2)) == Partition::universal(2));
  CHECK(left_kernel_congruence(cyclic_group(4)) == Partition::identity(4));  // identity separates
}

TEST_CASE("generated congruence equals the join of principals (random pairs, orders 4 and 5)") {
  std::mt19937 rng(20240817);
  std::vector<CayleyTable> pool = {cyclic_group(4), square_semilattice(), klein4(), near_miss5(),
                                   cyclic_group(5), b0(), null2_with_identity()};
  for (const CayleyTable& t : pool) {
    int n = t.order();
    std::uniform_int_distribution<int> elem(0, n - 1), len(0, 4);
    for (int trial = 0; trial < 50; ++trial) {
      std::vector<std::pair<int, int>> pairs;
      int count = len(rng);
      for (int i = 0; i < count; ++i) pairs.emplace_back(elem(rng), elem(rng));
      Partition direct = congruence_generated_by(t, pairs);
      Partition joined = Partition::identity(n);
      for (auto [a, b] : pairs) joined = join_congruences(t, joined, principal_congruence(t, a, b));
      CHECK(direct == joined);
    }
  }
}

TEST_CASE("quotient by congruence") {
  CayleyTable z4 = cyclic_group(4);
  CongruenceQuotient q = quotient_by_congruence(z4, make_partition(4, {{0, 2}, {1, 3}}));
  CHECK(q.table == cyclic_group(2));
  CHECK(q.element_map == std::vector<int>{0, 1, 0, 1});

  CHECK(quotient_by_congruence(z4, Partition::identity(4)).table == z4);
  CHECK(quotient_by_congruence(z4, Partition::universal(4)).table.order() == 1);

  // Not a congruence: {0,1} in Z4 merged without closure.
  try {
    quotient_by_congruence(z4, make_partition(4, {{0, 1}, {2}, {3}}));
    FAIL("expected NotACongruence");
  } catch (const NotACongruence& e) {
    CHECK(std::min(e.x, e.y) == 0);
    CHECK(std::max(e.x, e.y) == 1);
  }
}

TEST_CASE("partition serialization") {
  CHECK(make_partition(4, {{0, 2}, {1, 3}}).to_string() == "[[0,2],[1,3]]");
  CHECK(Partition::universal(3).to_string() == "[[0,1,2]]");
  CHECK(Partition::identity(2).to_string() == "[[0],[1]]");
}

}  // TEST_SUITE
