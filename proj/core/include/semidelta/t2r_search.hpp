#ifndef SEMIDELTA_T2R_SEARCH_HPP_
#define SEMIDELTA_T2R_SEARCH_HPP_

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "semidelta/cayley_table.hpp"

namespace semidelta {

struct SearchCounters {
  std::uint64_t nodes = 0;           // value placements attempted
  std::uint64_t assoc_rejected = 0;  // placements failing associativity
  std::uint64_t nil_rejected = 0;    // completed S0 blocks that are not nil
  std::uint64_t p6_pruned = 0;
  std::uint64_t p7_pruned = 0;
  std::uint64_t leaves = 0;           // fully assembled candidate tables
  std::uint64_t leaf_rejected = 0;    // candidates failing recognition
};

/// Serializable suspension point of the shape-constrained search. The
/// cursor pins the exact backtracking state, so resuming visits exactly
/// the unvisited part of the tree and reproduces the same counters as an
/// uninterrupted run.
struct SearchCheckpoint {
  static constexpr int current_version = 1;

  int version = current_version;
  int max_order = 0;
  int current_order = 0;
  bool prune_p6 = true;
  bool prune_p7 = true;
  int depth = 0;
  std::vector<int> cursor;  // value stack for current_order
  SearchCounters counters;

  std::string to_json() const;
  static SearchCheckpoint from_json(const std::string& text);

  /// Write-temp-then-rename, so a reader never sees a partial file.
  void save(const std::string& path) const;
  static SearchCheckpoint load(const std::string& path);
};

struct T2rSearchOptions {
  int max_order = 7;
  int order_cap = 7;
  bool allow_above_cap = false;
  bool prune_p6 = true;  // drop branches where every S0 element is fixed by u or v
  bool prune_p7 = true;  // drop branches where S0*S0 came out smaller than S0
  std::optional<std::string> checkpoint_path;
  std::uint64_t checkpoint_every = 1u << 22;
  std::optional<std::uint64_t> node_budget;  // suspend after this many placements
};

struct T2rSearchOutcome {
  std::optional<CayleyTable> witness;  // a genuine T2R table, should it exist
  SearchCounters counters;
  bool completed = false;
  std::optional<SearchCheckpoint> suspended;  // set when the budget ran out
};

/// Exhaustive search for a T2R semigroup up to the given order.
///
/// Only shape-constrained tables are visited: the last two indices form
/// a right-zero pair, the rest is a nil block with its zero at index 0,
/// and mixed products stay in the block. Every table with a valid T2R
/// split is isomorphic to one of this shape, so an empty search result
/// rules out witnesses up to max_order. Each completed candidate runs
/// through full recognition (including the congruence-chain test).
/// The two pruning rules discard branches that provably cannot carry a
/// genuine T2R semigroup; disabling them must not change the outcome.
T2rSearchOutcome search_t2r(const T2rSearchOptions& opts, const SearchCheckpoint* resume = nullptr);

}  // namespace semidelta

#endif  // SEMIDELTA_T2R_SEARCH_HPP_
