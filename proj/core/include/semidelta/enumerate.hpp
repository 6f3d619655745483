#ifndef SEMIDELTA_ENUMERATE_HPP_
#define SEMIDELTA_ENUMERATE_HPP_

#include <cstdint>
#include <functional>
#include <optional>
#include <span>
#include <vector>

#include "semidelta/cayley_table.hpp"

namespace semidelta {

/// Applies a relabeling: new[perm[a]][perm[b]] = perm[old[a][b]].
CayleyTable relabel(const CayleyTable& t, std::span<const int> perm);

/// Lexicographically minimal relabeling of a table, the permutation
/// reaching it, and the automorphism count (relabelings fixing the
/// minimum). Branch-and-bound over label assignments rather than a
/// factorial scan: a partial assignment is abandoned as soon as its
/// determined row-major prefix exceeds the incumbent.
struct CanonicalTable {
  CayleyTable table;
  std::vector<int> relabeling;  // old index -> new index
  std::uint64_t automorphism_count;
};

CanonicalTable canonical_form(const CayleyTable& t);

/// Whether the table is its own canonical form (early-exit variant).
bool is_canonical(const CayleyTable& t);

struct IsoCheck {
  bool isomorphic;
  std::vector<int> witness;  // index map first -> second when isomorphic
};

IsoCheck are_isomorphic(const CayleyTable& a, const CayleyTable& b);

struct EnumerationOptions {
  bool up_to_iso = true;
  int order_cap = 6;
  bool allow_above_cap = false;
  int threads = 1;
};

/// Streams every semigroup table of the given order in row-major
/// lexicographic order: cell-by-cell backtracking with incremental
/// associativity checking, and lex-minimality rejection of non-canonical
/// tables when up_to_iso is set. The visitor returns false to stop.
/// With threads > 1 the tree is split by first-row prefix and the
/// partitions are emitted in deterministic task order regardless of
/// scheduling. Throws SizeLimitExceeded above the cap unless overridden.
void enumerate_semigroups(int order, const EnumerationOptions& opts,
                          const std::function<bool(const CayleyTable&)>& emit);

std::vector<CayleyTable> all_semigroups(int order, bool up_to_iso = true, int threads = 1);

std::uint64_t count_semigroups(int order, const EnumerationOptions& opts);

}  // namespace semidelta

#endif  // SEMIDELTA_ENUMERATE_HPP_
