#ifndef SEMIDELTA_GREEN_HPP_
#define SEMIDELTA_GREEN_HPP_

#include <optional>
#include <utility>
#include <vector>

#include "semidelta/cayley_table.hpp"
#include "semidelta/elem_set.hpp"

namespace semidelta {

/// Principal two-sided ideal of a: all products x*a*y with x, y ranging
/// over the monoid completion. Always contains a.
ElemSet principal_ideal(const CayleyTable& t, int a);

/// The J-class of a: elements generating the same principal ideal.
ElemSet j_class(const CayleyTable& t, int a);

/// principal_ideal(a) minus j_class(a). Empty exactly when a sits in a
/// minimal J-class with nothing below it; callers that branch on
/// "= {zero}" versus "nonzero" must treat the empty case separately.
ElemSet i_set(const CayleyTable& t, int a);

struct ChainCheck {
  bool chain;
  /// Generators of two inclusion-incomparable principal ideals.
  std::optional<std::pair<int, int>> witness;
};

/// Whether the two-sided ideals are totally ordered by inclusion.
/// Pairwise comparability of the principal ideals decides this: every
/// ideal of a finite semigroup is a union of principal ideals, and a
/// union taken along a chain is its largest member.
ChainCheck ideals_form_chain(const CayleyTable& t);

/// Precomputed J-structure of a table. Class ids are assigned in
/// topological order: strictly smaller principal ideals first, ties by
/// smallest member, so id order refines ideal inclusion.
struct JStructure {
  std::vector<int> j_class_of;              // element -> class id
  std::vector<ElemSet> principal_ideal_of;  // element -> its principal ideal
  std::vector<ElemSet> j_classes;           // class id -> members
  std::vector<ElemSet> class_ideal;         // class id -> shared principal ideal
  bool chain_ordered;
  std::optional<std::pair<int, int>> chain_witness;
};

JStructure j_structure(const CayleyTable& t);

}  // namespace semidelta

#endif  // SEMIDELTA_GREEN_HPP_
