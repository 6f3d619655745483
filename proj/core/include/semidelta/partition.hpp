#ifndef SEMIDELTA_PARTITION_HPP_
#define SEMIDELTA_PARTITION_HPP_

#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

namespace semidelta {

/// An equivalence relation on 0..n-1 in canonical form: each element
/// maps to the smallest member of its class. This is the representation
/// of congruences throughout the library.
class Partition {
 public:
  static Partition identity(int n);
  static Partition universal(int n);

  /// Canonicalizes an arbitrary representative map (class_of[x] and x
  /// related iff equal after path compression).
  static Partition from_class_map(std::vector<int> class_of);

  int order() const { return static_cast<int>(rep_.size()); }
  int rep(int x) const { return rep_[static_cast<std::size_t>(x)]; }
  bool same(int x, int y) const { return rep_[static_cast<std::size_t>(x)] == rep_[static_cast<std::size_t>(y)]; }
  int class_count() const;

  /// Classes as sorted lists, ordered by their smallest member.
  std::vector<std::vector<int>> classes() const;

  /// Canonical text form, e.g. "[[0,2],[1,3]]".
  std::string to_string() const;

  bool operator==(const Partition&) const = default;
  bool operator<(const Partition& o) const { return rep_ < o.rep_; }

  std::size_t hash() const;

 private:
  explicit Partition(std::vector<int> rep) : rep_(std::move(rep)) {}
  std::vector<int> rep_;
};

struct PartitionHash {
  std::size_t operator()(const Partition& p) const { return p.hash(); }
};

enum class PartitionOrder { equal, finer, coarser, incomparable };

/// Refinement comparison: finer means the left partition strictly
/// refines the right one. Throws OrderMismatch on different orders.
PartitionOrder compare_partitions(const Partition& p, const Partition& q);

}  // namespace semidelta

#endif  // SEMIDELTA_PARTITION_HPP_
