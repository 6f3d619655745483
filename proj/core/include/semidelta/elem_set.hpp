#ifndef SEMIDELTA_ELEM_SET_HPP_
#define SEMIDELTA_ELEM_SET_HPP_

#include <bit>
#include <cassert>
#include <cstdint>
#include <vector>

namespace semidelta {

/// A set of element indices, stored as a 64-bit mask.
///
/// Every set-valued computation in the library (ideals, J-classes,
/// decompositions) runs over tables of small order, so a fixed-width
/// mask keeps those inner loops branch-free. Orders above 64 are not
/// representable and are rejected at table construction.
class ElemSet {
 public:
  static constexpr int max_order = 64;

  constexpr ElemSet() = default;

  static constexpr ElemSet single(int i) {
    ElemSet s;
    s.insert(i);
    return s;
  }

  static constexpr ElemSet full(int n) {
    assert(n >= 0 && n <= max_order);
    ElemSet s;
    s.bits_ = (n == max_order) ? ~std::uint64_t{0} : ((std::uint64_t{1} << n) - 1);
    return s;
  }

  constexpr void insert(int i) {
    assert(i >= 0 && i < max_order);
    bits_ |= std::uint64_t{1} << i;
  }

  constexpr void erase(int i) {
    assert(i >= 0 && i < max_order);
    bits_ &= ~(std::uint64_t{1} << i);
  }

  constexpr bool contains(int i) const {
    return (bits_ >> i) & 1u;
  }

  constexpr int size() const { return std::popcount(bits_); }
  constexpr bool empty() const { return bits_ == 0; }

  constexpr bool subset_of(ElemSet other) const {
    return (bits_ & ~other.bits_) == 0;
  }

  constexpr ElemSet operator|(ElemSet o) const { return ElemSet(bits_ | o.bits_); }
  constexpr ElemSet operator&(ElemSet o) const { return ElemSet(bits_ & o.bits_); }
  constexpr ElemSet operator-(ElemSet o) const { return ElemSet(bits_ & ~o.bits_); }
  constexpr ElemSet& operator|=(ElemSet o) {
    bits_ |= o.bits_;
    return *this;
  }
  constexpr bool operator==(const ElemSet&) const = default;

  /// Smallest member; set must be nonempty.
  constexpr int min() const {
    assert(!empty());
    return std::countr_zero(bits_);
  }

  /// Calls f(i) for each member in ascending order.
  template <typename F>
  void for_each(F&& f) const {
    std::uint64_t b = bits_;
    while (b) {
      f(std::countr_zero(b));
      b &= b - 1;
    }
  }

  std::vector<int> to_vector() const {
    std::vector<int> out;
    out.reserve(static_cast<std::size_t>(size()));
    for_each([&](int i) { out.push_back(i); });
    return out;
  }

  constexpr std::uint64_t bits() const { return bits_; }

 private:
  constexpr explicit ElemSet(std::uint64_t raw) : bits_(raw) {}
  std::uint64_t bits_ = 0;
};

}  // namespace semidelta

#endif  // SEMIDELTA_ELEM_SET_HPP_
