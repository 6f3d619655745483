#ifndef SEMIDELTA_CAYLEY_TABLE_HPP_
#define SEMIDELTA_CAYLEY_TABLE_HPP_

#include <optional>
#include <vector>

#include "semidelta/elem_set.hpp"

namespace semidelta {

/// A finite semigroup given by its multiplication table.
///
/// Elements are the dense indices 0..n-1; names, if any, live in the I/O
/// layer. Row is the left factor: at(a, b) = a*b. The validating
/// constructor certifies closure and associativity and throws
/// ClosureViolation / AssociativityViolation with the first offending
/// cell or triple.
class CayleyTable {
 public:
  CayleyTable(int order, std::vector<int> entries);

  /// Builds without re-validating. For internal constructions that are
  /// associative by design (quotients, enumeration output, transposes);
  /// checked in debug builds.
  static CayleyTable trusted(int order, std::vector<int> entries);

  int order() const { return order_; }

  int at(int a, int b) const { return entries_[static_cast<std::size_t>(a) * order_ + b]; }

  const std::vector<int>& entries() const { return entries_; }

  /// The opposite semigroup (a*b read as b*a). Associativity transfers.
  CayleyTable transpose() const;

  bool operator==(const CayleyTable&) const = default;

 private:
  struct trusted_tag {};
  CayleyTable(trusted_tag, int order, std::vector<int> entries);

  int order_;
  std::vector<int> entries_;
};

/// a^k for k >= 1.
int power(const CayleyTable& t, int a, int k);

/// Index and period of one element's power sequence: the minimal i >= 1,
/// p >= 1 with a^(i+p) = a^i. The whole sequence a, a^2, a^3, ... is
/// determined by the pair.
struct PowerProfile {
  int element;
  int index;
  int period;
};

PowerProfile power_profile(const CayleyTable& t, int a);

/// Existing two-sided identity, if any.
std::optional<int> find_identity(const CayleyTable& t);

/// The unique two-sided zero, if any.
std::optional<int> find_zero(const CayleyTable& t);

/// The monoid completion S^1: a view of the table with an identity
/// available. When the table already has a two-sided identity it is
/// reused and size() == order(); otherwise the synthetic index n acts as
/// the identity. Holds a reference to the underlying table.
class MonoidView {
 public:
  explicit MonoidView(const CayleyTable& base);
  explicit MonoidView(CayleyTable&&) = delete;  // views must outlive their table

  int size() const { return base_->order() + (synthetic_ ? 1 : 0); }

  int product(int x, int y) const {
    int n = base_->order();
    if (x == n) return y;
    if (y == n) return x;
    return base_->at(x, y);
  }

  int identity() const { return synthetic_ ? base_->order() : existing_; }
  bool has_synthetic_identity() const { return synthetic_; }

  const CayleyTable& base() const { return *base_; }

  /// The view as a standalone table (order size()).
  CayleyTable materialize() const;

 private:
  const CayleyTable* base_;
  bool synthetic_;
  int existing_ = -1;
};

inline MonoidView adjoin_identity(const CayleyTable& t) { return MonoidView(t); }
MonoidView adjoin_identity(CayleyTable&&) = delete;

/// S^0: a copy with the new index n acting as a two-sided zero.
CayleyTable adjoin_zero(const CayleyTable& t);

/// Smallest product-closed superset of a nonempty seed.
ElemSet subsemigroup_closure(const CayleyTable& t, ElemSet seed);

/// Two-sided ideal test: S*X and X*S inside X. X must be nonempty.
bool is_ideal(const CayleyTable& t, ElemSet candidate);

struct ReesQuotient {
  CayleyTable table;             // order n - |ideal| + 1, zero at index 0
  std::vector<int> element_map;  // old index -> new index
};

/// Collapses a two-sided ideal to a single zero, placed at index 0 of
/// the quotient. Non-ideal elements keep their relative order at
/// indices 1, 2, .... Throws NotAnIdeal if the argument is not one.
ReesQuotient rees_quotient(const CayleyTable& t, ElemSet ideal);

struct Subtable {
  CayleyTable table;
  std::vector<int> elements;  // new index -> old index, ascending
};

/// Restriction of the table to a product-closed subset.
Subtable restrict_to(const CayleyTable& t, ElemSet closed);

}  // namespace semidelta

#endif  // SEMIDELTA_CAYLEY_TABLE_HPP_
