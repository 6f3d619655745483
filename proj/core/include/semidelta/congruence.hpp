#ifndef SEMIDELTA_CONGRUENCE_HPP_
#define SEMIDELTA_CONGRUENCE_HPP_

#include <optional>
#include <span>
#include <utility>
#include <vector>

#include "semidelta/cayley_table.hpp"
#include "semidelta/partition.hpp"

namespace semidelta {

/// Smallest congruence identifying a and b: union-find plus a worklist
/// that re-closes under left and right translation after every merge.
Partition principal_congruence(const CayleyTable& t, int a, int b);

/// Smallest congruence containing all listed pairs; equals the join of
/// the pairs' principal congruences. Empty list gives the identity.
Partition congruence_generated_by(const CayleyTable& t, std::span<const std::pair<int, int>> pairs);

/// Join in the congruence lattice.
Partition join_congruences(const CayleyTable& t, const Partition& p, const Partition& q);

/// The complete congruence lattice as a deterministically ordered list
/// (sorted by representative vector). Identity and universal are always
/// present. Cost grows with the partition count, so orders above the cap
/// are rejected with SizeLimitExceeded.
std::vector<Partition> all_congruences(const CayleyTable& t, int order_cap = 8);

struct CongruenceViolation {
  int x, y, s;
  bool left;  // true: s*x vs s*y, false: x*s vs y*s
};

/// First translation-compatibility failure, if the partition is not a
/// congruence of the table.
std::optional<CongruenceViolation> find_congruence_violation(const CayleyTable& t, const Partition& p);

bool is_congruence(const CayleyTable& t, const Partition& p);

struct DeltaCheck {
  bool is_delta;
  /// Two incomparable congruences, when the answer is false.
  std::optional<std::pair<Partition, Partition>> witness;
};

/// Chain test on the congruence lattice. Decided on the principal
/// congruences alone: every congruence of a finite semigroup is a join
/// of principal ones, and a join taken over a chain is its largest
/// element, so pairwise comparability of the principal congruences
/// already forces the whole lattice to be a chain.
DeltaCheck is_delta(const CayleyTable& t);

/// Relates a, b iff s*a = s*b for every s. Always a congruence; the
/// result is certified by a compatibility scan.
Partition left_kernel_congruence(const CayleyTable& t);

struct CongruenceQuotient {
  CayleyTable table;
  std::vector<int> element_map;  // old index -> class index
};

/// Quotient table on class representatives (classes indexed by their
/// smallest member, ascending). Throws NotACongruence with a violating
/// triple if the partition is incompatible.
CongruenceQuotient quotient_by_congruence(const CayleyTable& t, const Partition& p);

}  // namespace semidelta

#endif  // SEMIDELTA_CONGRUENCE_HPP_
