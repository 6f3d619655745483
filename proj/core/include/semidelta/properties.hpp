#ifndef SEMIDELTA_PROPERTIES_HPP_
#define SEMIDELTA_PROPERTIES_HPP_

#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "semidelta/cayley_table.hpp"

namespace semidelta {

/// A two-sided zero exists and some power of every element equals it.
bool is_nil(const CayleyTable& t);

struct WeCheck {
  bool holds;
  struct Witness {
    int a, b, n;  // no m >= 0 balances this pair at this exponent
  };
  std::optional<Witness> witness;
};

/// Weakly exponential test: for every pair (a, b) and every n >= 1 there
/// must be an m >= 0 with (ab)^(n+m) = a^n b^n (ab)^m = (ab)^m a^n b^n,
/// where m = 0 reads the (ab)^m factor as empty.
///
/// The quantifiers are resolved by a finite scan. Both sides are
/// eventually periodic in n with index at most the largest power-profile
/// index of a, b, ab and period dividing the lcm of their periods, so n
/// ranges over [1, i_max + lcm]; in m they are eventually periodic with
/// the profile of ab, so m ranges over [0, i_ab + p_ab].
WeCheck is_weakly_exponential(const CayleyTable& t);

struct RCommCheck {
  bool holds;
  std::optional<std::pair<int, int>> witness;  // (s, t) with no r in S^1
};

/// For all s, t there is r in S^1 with s*t = t*s*r.
RCommCheck is_r_commutative(const CayleyTable& t);

/// A word identity in k variables, e.g. axyb = ayxb. Words are variable
/// index sequences; evaluation folds left to right.
struct IdentitySpec {
  int variable_count;
  std::vector<int> lhs, rhs;

  /// Parses "axyb=ayxb": single-letter variables, numbered by first
  /// appearance. Throws ParseError on malformed input.
  static IdentitySpec parse(std::string_view text);

  static IdentitySpec medial();            // axyb = ayxb
  static IdentitySpec left_commutative();  // xya = yxa
  static IdentitySpec right_commutative(); // axy = ayx
};

struct IdentityCheck {
  bool holds;
  std::optional<std::vector<int>> witness;  // failing variable assignment
};

IdentityCheck satisfies_identity(const CayleyTable& t, const IdentitySpec& spec);

struct PermutativeCheck {
  bool holds;
  int degree = 0;                // k of the witnessing identity
  std::vector<int> permutation;  // sigma with x_0..x_{k-1} = x_sigma(0)..x_sigma(k-1)
  int max_degree_searched = 0;
};

/// Searches for a non-identity permutational identity of degree
/// 2..max_degree and reports the first hit (degree ascending, then
/// permutations in lexicographic order). The unbounded notion is
/// under-approximated by the degree cap, which is echoed in the result.
PermutativeCheck is_permutative(const CayleyTable& t, int max_degree = 4);

struct SpecialFlags {
  bool left_zero = false;
  bool right_zero = false;
  bool rectangular_band = false;
  bool group = false;
  bool cyclic_p_group = false;  // includes the trivial group (order p^0)
  bool group_with_zero = false;
  bool commutative = false;
};

SpecialFlags recognize_special(const CayleyTable& t);

/// Group of prime-power order test; returns (p, k) with order = p^k.
/// The trivial group reports k = 0 with no prime.
struct PGroupCheck {
  bool is_cyclic_p_group;
  std::optional<int> prime;
  int exponent = 0;
};

PGroupCheck cyclic_p_group_parameters(const CayleyTable& t);

}  // namespace semidelta

#endif  // SEMIDELTA_PROPERTIES_HPP_
