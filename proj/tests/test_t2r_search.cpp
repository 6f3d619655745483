#include "doctest.h"

#include <cstdio>

#include "semidelta/errors.hpp"
#include "semidelta/t2r_search.hpp"
#include "test_helpers.hpp"

using namespace semidelta;

namespace {

T2rSearchOptions base_options(int max_order, bool p6, bool p7) {
  T2rSearchOptions opts;
  opts.max_order = max_order;
  opts.prune_p6 = p6;
  opts.prune_p7 = p7;
  return opts;
}

bool counters_equal(const SearchCounters& a, const SearchCounters& b) {
  return a.nodes == b.nodes && a.assoc_rejected == b.assoc_rejected && a.nil_rejected == b.nil_rejected &&
         a.p6_pruned == b.p6_pruned && a.p7_pruned == b.p7_pruned && a.leaves == b.leaves &&
         a.leaf_rejected == b.leaf_rejected;
}

}  // namespace

TEST_SUITE("t2r_search") {

TEST_CASE("no shape below order 4") {
  T2rSearchOutcome out = search_t2r(base_options(3, true, true));
  CHECK(out.completed);
  CHECK(!out.witness.has_value());
  CHECK(out.counters.nodes == 0);
}

TEST_CASE("pruning soundness: identical outcome with and without rules (orders <= 5)") {
  T2rSearchOutcome pruned = search_t2r(base_options(5, true, true));
  T2rSearchOutcome unpruned = search_t2r(base_options(5, false, false));
  T2rSearchOutcome p6_only = search_t2r(base_options(5, true, false));
  T2rSearchOutcome p7_only = search_t2r(base_options(5, false, true));
  CHECK(pruned.completed);
  CHECK(unpruned.completed);
  CHECK(!pruned.witness.has_value());
  CHECK(!unpruned.witness.has_value());
  CHECK(!p6_only.witness.has_value());
  CHECK(!p7_only.witness.has_value());

  // The rules really cut the tree.
  CHECK(pruned.counters.nodes < unpruned.counters.nodes);
  CHECK(pruned.counters.p7_pruned > 0);
  // Without pruning the search reaches complete candidates; none is
  // recognized (that would be a finite T2R semigroup).
  CHECK(unpruned.counters.leaves > 0);
  CHECK(unpruned.counters.leaves == unpruned.counters.leaf_rejected);
  CHECK(pruned.counters.leaves == 0);  // nilpotence of S0 forces S0^2 smaller than S0
}

TEST_CASE("checkpoint json round-trip") {
  SearchCheckpoint cp;
  cp.max_order = 6;
  cp.current_order = 5;
  cp.prune_p6 = false;
  cp.prune_p7 = true;
  cp.depth = 3;
  cp.cursor = {1, 0, 2, 0, 0};
  cp.counters.nodes = 42;
  cp.counters.assoc_rejected = 17;

  SearchCheckpoint back = SearchCheckpoint::from_json(cp.to_json());
  CHECK(back.max_order == 6);
  CHECK(back.current_order == 5);
  CHECK(!back.prune_p6);
  CHECK(back.prune_p7);
  CHECK(back.depth == 3);
  CHECK(back.cursor == cp.cursor);
  CHECK(counters_equal(back.counters, cp.counters));

  CHECK_THROWS_AS(SearchCheckpoint::from_json("{\"format\":\"other\"}"), CheckpointVersionMismatch);
  CHECK_THROWS_AS(
      SearchCheckpoint::from_json("{\"format\":\"semidelta-t2r-checkpoint\",\"version\":99}"),
      CheckpointVersionMismatch);
  CHECK_THROWS_AS(SearchCheckpoint::from_json("not json"), ParseError);
}

TEST_CASE("suspend and resume visit exactly the remaining tree") {
  T2rSearchOutcome full = search_t2r(base_options(4, false, false));
  REQUIRE(full.completed);

  for (std::uint64_t budget : {1ull, 2ull, 7ull, 50ull, 123ull, 1000ull}) {
    if (budget >= full.counters.nodes) break;
    T2rSearchOptions opts = base_options(4, false, false);
    opts.node_budget = budget;
    T2rSearchOutcome part = search_t2r(opts);
    REQUIRE(!part.completed);
    REQUIRE(part.suspended.has_value());
    CHECK(part.counters.nodes == budget);

    // Resume repeatedly with the same budget until done.
    SearchCheckpoint cp = *part.suspended;
    T2rSearchOutcome cur = part;
    int rounds = 0;
    while (!cur.completed) {
      REQUIRE(rounds++ < 10000);
      T2rSearchOptions more = base_options(4, false, false);
      more.node_budget = cur.counters.nodes + budget;
      cur = search_t2r(more, &cp);
      if (!cur.completed) cp = *cur.suspended;
    }
    CHECK(counters_equal(cur.counters, full.counters));
    CHECK(!cur.witness.has_value());
  }
}

TEST_CASE("checkpoint files are written atomically and resumable") {
  std::string path = "t2r_test_checkpoint.json";
  T2rSearchOptions opts = base_options(4, false, false);
  opts.node_budget = 25;
  opts.checkpoint_path = path;
  T2rSearchOutcome part = search_t2r(opts);
  REQUIRE(!part.completed);

  SearchCheckpoint cp = SearchCheckpoint::load(path);
  CHECK(counters_equal(cp.counters, part.counters));

  T2rSearchOptions rest = base_options(4, false, false);
  T2rSearchOutcome done = search_t2r(rest, &cp);
  CHECK(done.completed);
  T2rSearchOutcome straight = search_t2r(base_options(4, false, false));
  CHECK(counters_equal(done.counters, straight.counters));

  // Mismatched parameters are refused.
  T2rSearchOptions other = base_options(4, true, false);
  CHECK_THROWS_AS(search_t2r(other, &cp), CheckpointVersionMismatch);

  std::remove(path.c_str());
}

TEST_CASE("order cap is enforced") {
  T2rSearchOptions opts;
  opts.max_order = 9;
  CHECK_THROWS_AS(search_t2r(opts), SizeLimitExceeded);
}

}  // TEST_SUITE
