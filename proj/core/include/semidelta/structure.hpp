#ifndef SEMIDELTA_STRUCTURE_HPP_
#define SEMIDELTA_STRUCTURE_HPP_

#include <array>
#include <optional>
#include <string>
#include <vector>

#include "semidelta/cayley_table.hpp"
#include "semidelta/congruence.hpp"
#include "semidelta/elem_set.hpp"
#include "semidelta/properties.hpp"

namespace semidelta {

enum class TKind { T1, T2R, T2L };

std::string to_string(TKind k);

/// A candidate split S = S0 u S1 over the two-element semilattice: S1 is
/// a single idempotent (T1), a two-element right-zero pair (T2R) or
/// left-zero pair (T2L); S0 is the complement. Flags record which of the
/// defining requirements the split actually satisfies; producers emit
/// candidates with any flag combination and callers filter.
struct T2Decomposition {
  ElemSet s0;
  int u, v;  // the S1 pair; u == v for T1
  TKind kind;

  struct Flags {
    bool s0_nil = false;         // S0 product-closed and nil
    bool s0_nontrivial = false;  // |S0| >= 2
    bool s1_law_ok = false;      // S1 satisfies its band law
    bool products_into_s0 = false;  // S0*S1, S1*S0 and S0*S0 inside S0
    bool is_delta = false;          // congruence lattice of S is a chain
    bool all() const { return s0_nil && s0_nontrivial && s1_law_ok && products_into_s0 && is_delta; }
  } flags;

  ElemSet s1() const {
    ElemSet s = ElemSet::single(u);
    s.insert(v);
    return s;
  }
};

/// All candidate splits of all three kinds, flags evaluated, in
/// deterministic order (T1 by idempotent, then T2R pairs, then T2L
/// pairs, lexicographically).
std::vector<T2Decomposition> find_t2_decompositions(const CayleyTable& t);

/// First candidate of the given kind with every flag true, if any.
/// A present T2R/T2L result would disprove the known non-existence of
/// finite instances.
std::optional<T2Decomposition> recognize_t2(const CayleyTable& t, TKind kind);

struct ConditionOutcome {
  bool holds = false;
  bool vacuous = false;          // guard never fired
  std::vector<int> witness;      // violating elements, empty when holds
};

/// Outcome of the five conditions that characterize T2R semigroups:
///  (1) S is a semilattice of a non-trivial nil S0 and a two-element
///      right-zero S1 (S0 an ideal, S1 a subsemigroup),
///  (2) the ideals of S form a chain,
///  (3) every b in S0 has b in b*S1 or b*S1 inside S^1*b*S0,
///  (4) every b in S0 has {b} = S1*b or S1*b meeting S0*b*S^1 u S^1*b*S0,
///  (5) for every b whose J-class is a two-element set with I(b)
///      properly bigger than {0}, every a in I(b) admits x, y in S^1
///      with x*J_b*y meeting J_a without being contained in it.
/// The corrected guard for (5) skips b with I(b) = {0}; the uncorrected
/// variant (historical form) fires on |J_b| = 2 alone.
struct T2rConditionReport {
  std::array<ConditionOutcome, 5> conditions;
  bool corrected_guard = true;
  bool all_hold() const {
    for (const auto& c : conditions)
      if (!c.holds) return false;
    return true;
  }
};

/// Evaluates the five conditions against a concrete split. Throws
/// PartitionMismatch if s0 and {u, v} do not partition the element set.
T2rConditionReport t2r_condition_report(const CayleyTable& t, const T2Decomposition& d,
                                        bool corrected_guard = true);

struct CheckOutcome {
  enum class Verdict { pass, fail, vacuous };
  Verdict verdict = Verdict::vacuous;
  std::vector<int> witness;
  bool passed() const { return verdict != Verdict::fail; }
};

/// Verdicts for the necessary conditions every genuine T2R semigroup
/// satisfies, evaluated literally on a T2R-shaped candidate:
///   P2: for b with |J_b| = 2 and I(b) = {0}: x*J_b*y avoids 0 or equals
///       {0}; J_b*S0 = S0*J_b = {0}; S1*J_b is {0} or J_b.
///   C3: for b in S0 with |J_b| = 2: S0*J_b and J_b*S0 inside I(b), and
///       S1*J_b inside I(b) or equal to J_b.
///   P4: some b in S0 has |J_b| = 2.
///   P6: some b in S0 has u*b != b and v*b != b.
///   P7: S0*S0 = S0.
/// Failures carry witnesses. Throws NotT2RShaped unless the candidate
/// has kind T2R with the right-zero law.
struct T2rNecessaryReport {
  CheckOutcome p2, c3, p4, p6, p7;
  bool degenerate = false;  // |S0| < 2: shape too small to be meaningful
};

T2rNecessaryReport t2r_necessary_propositions(const CayleyTable& t, const T2Decomposition& d);

enum class Template { G, G0, B, B0, B1, NilChain, T1, T2R, T2L, NotWeDelta };

std::string to_string(Template tp);

/// Which structure a weakly exponential chain-congruence semigroup is:
///   G        cyclic group of prime-power order (p, k set; trivial has k = 0)
///   G0       such a group with a zero adjoined
///   B        two-element rectangular band (orientation set)
///   B0 / B1  the band with a zero / an identity adjoined
///   NilChain non-trivial nil semigroup with chain-ordered ideals
///   T1/T2R/T2L  semilattice-of-nil decompositions (witness decomposition set)
/// Tables that are not weakly exponential or not chain-congruence get
/// NotWeDelta with the failing check attached.
struct ClassificationResult {
  Template tmpl;
  std::optional<int> p, k;
  std::optional<bool> right_oriented;
  std::optional<T2Decomposition> decomposition;
  std::optional<WeCheck> we_check;        // populated for NotWeDelta
  std::optional<DeltaCheck> delta_check;  // populated for NotWeDelta
};

/// Matches a weakly exponential chain-congruence table against the
/// templates above. Exactly one template applies; if none does, the
/// classification has been falsified on a finite instance and
/// ClassificationGap is thrown with diagnostics.
ClassificationResult classify_we_delta(const CayleyTable& t);

/// How many templates match (used to assert disjointness).
int count_matching_templates(const CayleyTable& t);

}  // namespace semidelta

#endif  // SEMIDELTA_STRUCTURE_HPP_
