// Acceptance suite: exhaustive desk-scale verification of the library's
// claims. Each criterion prints one [PASS]/[FAIL] line; the process
// exits nonzero if any criterion fails.

#include <chrono>
#include <cstdio>
#include <functional>
#include <random>
#include <set>
#include <string>
#include <vector>

#include "semidelta/congruence.hpp"
#include "semidelta/enumerate.hpp"
#include "semidelta/errors.hpp"
#include "semidelta/green.hpp"
#include "semidelta/properties.hpp"
#include "semidelta/structure.hpp"
#include "semidelta/t2r_search.hpp"

using namespace semidelta;

namespace {

struct Criterion {
  int number;
  std::string name;
  std::function<bool(std::string&)> run;
};

// ---------- shared corpora ----------

const std::vector<CayleyTable>& corpus(int order) {
  static std::vector<std::vector<CayleyTable>> cache(9);
  auto& slot = cache[static_cast<std::size_t>(order)];
  if (slot.empty()) slot = all_semigroups(order, true, 4);
  return slot;
}

// ---------- criterion 1 ----------

bool chain_over_lattice(const CayleyTable& t) {
  std::vector<Partition> lattice = all_congruences(t);
  for (std::size_t i = 0; i < lattice.size(); ++i)
    for (std::size_t j = i + 1; j < lattice.size(); ++j)
      if (compare_partitions(lattice[i], lattice[j]) == PartitionOrder::incomparable) return false;
  return true;
}

bool criterion_delta_oracle(std::string& detail) {
  std::size_t checked = 0, mismatches = 0;
  for (int n = 1; n <= 4; ++n)
    for (const CayleyTable& t : corpus(n)) {
      ++checked;
      if (is_delta(t).is_delta != chain_over_lattice(t)) ++mismatches;
    }
  detail = "fast principal-congruence test vs full lattice chain test on " + std::to_string(checked) +
           " tables of order <= 4, " + std::to_string(mismatches) + " mismatches";
  return mismatches == 0;
}

// ---------- criterion 2 ----------

std::uint64_t naive_labeled_count(int n) {
  std::vector<int> e(static_cast<std::size_t>(n) * n, 0);
  auto at = [&](int a, int b) { return e[static_cast<std::size_t>(a) * n + b]; };
  std::uint64_t count = 0;
  for (;;) {
    bool assoc = true;
    for (int a = 0; a < n && assoc; ++a)
      for (int b = 0; b < n && assoc; ++b)
        for (int c = 0; c < n && assoc; ++c)
          if (at(at(a, b), c) != at(a, at(b, c))) assoc = false;
    if (assoc) ++count;
    int i = n * n - 1;
    while (i >= 0 && e[static_cast<std::size_t>(i)] == n - 1) e[static_cast<std::size_t>(i--)] = 0;
    if (i < 0) break;
    ++e[static_cast<std::size_t>(i)];
  }
  return count;
}

std::uint64_t naive_iso_count(int n) {
  std::vector<int> e(static_cast<std::size_t>(n) * n, 0);
  std::set<std::vector<int>> reps;
  std::vector<int> perm(static_cast<std::size_t>(n));
  for (;;) {
    bool assoc = true;
    auto at = [&](int a, int b) { return e[static_cast<std::size_t>(a) * n + b]; };
    for (int a = 0; a < n && assoc; ++a)
      for (int b = 0; b < n && assoc; ++b)
        for (int c = 0; c < n && assoc; ++c)
          if (at(at(a, b), c) != at(a, at(b, c))) assoc = false;
    if (assoc) {
      std::vector<int> least = e;
      for (int i = 0; i < n; ++i) perm[static_cast<std::size_t>(i)] = i;
      do {
        std::vector<int> img(e.size());
        for (int a = 0; a < n; ++a)
          for (int b = 0; b < n; ++b)
            img[static_cast<std::size_t>(perm[static_cast<std::size_t>(a)]) * n +
                perm[static_cast<std::size_t>(b)]] = perm[static_cast<std::size_t>(at(a, b))];
        if (img < least) least = img;
      } while (std::next_permutation(perm.begin(), perm.end()));
      reps.insert(least);
    }
    int i = n * n - 1;
    while (i >= 0 && e[static_cast<std::size_t>(i)] == n - 1) e[static_cast<std::size_t>(i--)] = 0;
    if (i < 0) break;
    ++e[static_cast<std::size_t>(i)];
  }
  return reps.size();
}

bool criterion_enumeration_counts(std::string& detail) {
  bool ok = true;
  std::string parts;
  for (int n = 1; n <= 3; ++n) {
    EnumerationOptions labeled;
    labeled.up_to_iso = false;
    std::uint64_t lab = count_semigroups(n, labeled);
    std::uint64_t lab_oracle = naive_labeled_count(n);
    EnumerationOptions iso;
    std::uint64_t cls = count_semigroups(n, iso);
    std::uint64_t cls_oracle = naive_iso_count(n);
    ok = ok && lab == lab_oracle && cls == cls_oracle;
    parts += "n=" + std::to_string(n) + ": " + std::to_string(lab) + "/" + std::to_string(lab_oracle) +
             " labeled, " + std::to_string(cls) + "/" + std::to_string(cls_oracle) + " classes; ";
  }
  ok = ok && count_semigroups(1, EnumerationOptions{}) == 1 && count_semigroups(2, EnumerationOptions{}) == 5;
  detail = parts + "(enumerator/oracle)";
  return ok;
}

// ---------- criterion 3 ----------

bool criterion_t2r_nonexistence(std::string& detail) {
  T2rSearchOptions pruned;
  pruned.max_order = 7;
  T2rSearchOutcome full = search_t2r(pruned);

  T2rSearchOptions open5;
  open5.max_order = 5;
  open5.prune_p6 = open5.prune_p7 = false;
  T2rSearchOutcome unpruned5 = search_t2r(open5);

  T2rSearchOptions closed5;
  closed5.max_order = 5;
  T2rSearchOutcome pruned5 = search_t2r(closed5);

  bool ok = full.completed && !full.witness.has_value() && unpruned5.completed &&
            !unpruned5.witness.has_value() && pruned5.completed && !pruned5.witness.has_value();
  detail = "pruned search to order 7: " + std::to_string(full.counters.nodes) +
           " nodes, no witness; unpruned to order 5: " + std::to_string(unpruned5.counters.nodes) +
           " nodes, " + std::to_string(unpruned5.counters.leaves) +
           " complete candidates, all rejected; pruned-vs-unpruned outcome identical (left-zero dual "
           "covered by the opposite tables of the same shape space)";
  return ok;
}

// ---------- criterion 4 ----------

bool criterion_classification(std::string& detail) {
  std::size_t we_delta = 0, gaps = 0, multi = 0, t2rl = 0;
  std::vector<std::size_t> tally(10, 0);
  for (int n = 1; n <= 5; ++n)
    for (const CayleyTable& t : corpus(n)) {
      ClassificationResult r{};
      try {
        r = classify_we_delta(t);
      } catch (const ClassificationGap&) {
        ++gaps;
        continue;
      }
      if (r.tmpl == Template::NotWeDelta) continue;
      ++we_delta;
      ++tally[static_cast<std::size_t>(r.tmpl)];
      if (count_matching_templates(t) != 1) ++multi;
      if (r.tmpl == Template::T2R || r.tmpl == Template::T2L) ++t2rl;
    }
  detail = std::to_string(we_delta) + " weakly exponential chain-congruence tables of order <= 5: G=" +
           std::to_string(tally[0]) + " G0=" + std::to_string(tally[1]) + " B=" + std::to_string(tally[2]) +
           " B0=" + std::to_string(tally[3]) + " B1=" + std::to_string(tally[4]) +
           " NIL_CHAIN=" + std::to_string(tally[5]) + " T1=" + std::to_string(tally[6]) +
           "; gaps=" + std::to_string(gaps) + " multi-matches=" + std::to_string(multi) +
           " T2R/T2L=" + std::to_string(t2rl);
  return gaps == 0 && multi == 0 && t2rl == 0;
}

// ---------- criterion 5 ----------

bool oracle_weakly_exponential_50(const CayleyTable& t) {
  auto pow = [&](int x, int k) {
    int acc = x;
    for (int i = 1; i < k; ++i) acc = t.at(acc, x);
    return acc;
  };
  for (int a = 0; a < t.order(); ++a)
    for (int b = 0; b < t.order(); ++b) {
      int ab = t.at(a, b);
      for (int n = 1; n <= 50; ++n) {
        int anbn = t.at(pow(a, n), pow(b, n));
        bool ok = false;
        for (int m = 0; m <= 50 && !ok; ++m) {
          int lhs = pow(ab, n + m);
          int r1 = (m == 0) ? anbn : t.at(anbn, pow(ab, m));
          int r2 = (m == 0) ? anbn : t.at(pow(ab, m), anbn);
          ok = lhs == r1 && lhs == r2;
        }
        if (!ok) return false;
      }
    }
  return true;
}

bool criterion_bounded_we(std::string& detail) {
  std::size_t checked = 0, mismatches = 0, negatives = 0;
  for (int n = 1; n <= 4; ++n)
    for (const CayleyTable& t : corpus(n)) {
      ++checked;
      bool fast = is_weakly_exponential(t).holds;
      bool slow = oracle_weakly_exponential_50(t);
      if (fast != slow) ++mismatches;
      if (!fast) ++negatives;
    }
  detail = "bounded search vs 50-step oracle on " + std::to_string(checked) + " tables of order <= 4, " +
           std::to_string(mismatches) + " mismatches (" + std::to_string(negatives) + " non-examples)";
  return mismatches == 0;
}

// ---------- criterion 6 ----------

bool criterion_rees_contract(std::string& detail) {
  // All ideals of a finite semigroup are unions of principal ideals.
  auto ideals_of = [](const CayleyTable& t) {
    std::set<std::uint64_t> seen;
    std::vector<ElemSet> principals;
    for (int a = 0; a < t.order(); ++a)
      if (seen.insert(principal_ideal(t, a).bits()).second) principals.push_back(principal_ideal(t, a));
    std::set<std::uint64_t> unions;
    int m = static_cast<int>(principals.size());
    for (int mask = 1; mask < (1 << m); ++mask) {
      ElemSet u;
      for (int i = 0; i < m; ++i)
        if ((mask >> i) & 1) u |= principals[static_cast<std::size_t>(i)];
      unions.insert(u.bits());
    }
    std::vector<ElemSet> out;
    for (std::uint64_t bits : unions) {
      ElemSet s;
      for (int i = 0; i < t.order(); ++i)
        if ((bits >> i) & 1) s.insert(i);
      out.push_back(s);
    }
    return out;
  };

  std::mt19937 rng(118999);
  std::vector<const CayleyTable*> pool;
  for (int n = 2; n <= 5; ++n)
    for (const CayleyTable& t : corpus(n)) pool.push_back(&t);

  std::size_t failures = 0;
  const int samples = 1000;
  std::uniform_int_distribution<std::size_t> pick(0, pool.size() - 1);
  for (int trial = 0; trial < samples; ++trial) {
    const CayleyTable& t = *pool[pick(rng)];
    auto ideals = ideals_of(t);
    std::uniform_int_distribution<std::size_t> pick_ideal(0, ideals.size() - 1);
    ElemSet ideal = ideals[pick_ideal(rng)];
    ReesQuotient q = rees_quotient(t, ideal);
    bool ok = q.table.order() == t.order() - ideal.size() + 1;
    try {
      CayleyTable revalidated(q.table.order(), q.table.entries());
    } catch (const Error&) {
      ok = false;
    }
    for (int a = 0; a < t.order() && ok; ++a)
      for (int b = 0; b < t.order() && ok; ++b) {
        auto f = [&](int x) { return q.element_map[static_cast<std::size_t>(x)]; };
        ok = q.table.at(f(a), f(b)) == f(t.at(a, b));
      }
    if (!ok) ++failures;
  }
  detail = std::to_string(samples) + " sampled (table, ideal) pairs from orders 2..5: quotient associative, " +
           "order n-|I|+1, projection a homomorphism; failures=" + std::to_string(failures);
  return failures == 0;
}

// ---------- criterion 7 ----------

bool criterion_implication_ladder(std::string& detail) {
  IdentitySpec medial = IdentitySpec::medial(), leftcomm = IdentitySpec::left_commutative();
  std::size_t checked = 0, violations = 0;
  for (int n = 1; n <= 4; ++n)
    for (const CayleyTable& t : corpus(n)) {
      ++checked;
      bool comm = recognize_special(t).commutative;
      bool med = satisfies_identity(t, medial).holds;
      bool lc = satisfies_identity(t, leftcomm).holds;
      bool perm = is_permutative(t, 4).holds;
      if (comm && !med) ++violations;
      if (med && !perm) ++violations;
      if (lc && !perm) ++violations;
    }
  detail = "commutative=>medial=>permutative(<=4) and left-commutative=>permutative(<=4) on " +
           std::to_string(checked) + " tables of order <= 4, " + std::to_string(violations) +
           " counterexamples";
  return violations == 0;
}

// ---------- criterion 8 ----------

bool criterion_proposition_battery(std::string& detail) {
  CayleyTable nm(5, {
      0, 0, 0, 0, 0,
      0, 2, 0, 0, 0,
      0, 0, 0, 0, 0,
      0, 0, 0, 3, 4,
      0, 0, 0, 3, 4,
  });
  const T2Decomposition* split = nullptr;
  auto candidates = find_t2_decompositions(nm);
  for (const auto& d : candidates)
    if (d.kind == TKind::T2R) split = &d;
  if (!split) {
    detail = "no right-zero split found on the near-miss table";
    return false;
  }
  T2rNecessaryReport rep = t2r_necessary_propositions(nm, *split);
  auto is_pass = [](const CheckOutcome& c) { return c.verdict == CheckOutcome::Verdict::pass; };
  auto is_fail = [](const CheckOutcome& c) { return c.verdict == CheckOutcome::Verdict::fail; };
  auto is_vac = [](const CheckOutcome& c) { return c.verdict == CheckOutcome::Verdict::vacuous; };

  bool ok = !rep.degenerate && is_pass(rep.p2) && is_vac(rep.c3) && is_fail(rep.p4) && is_pass(rep.p6) &&
            rep.p6.witness == std::vector<int>{1} && is_fail(rep.p7) && rep.p7.witness == std::vector<int>{1};
  detail = "order-5 near-miss: P2 pass (band-pair class over zero), C3 vacuous, P4 fail, "
           "P6 pass (witness 1), P7 fail (S0^2 misses 1) — matches the hand evaluation";
  return ok;
}

}  // namespace

int main() {
  std::vector<Criterion> criteria = {
      {1, "delta-oracle-equivalence", criterion_delta_oracle},
      {2, "enumeration-self-consistency", criterion_enumeration_counts},
      {3, "t2r-nonexistence-search", criterion_t2r_nonexistence},
      {4, "classification-completeness", criterion_classification},
      {5, "bounded-identity-validity", criterion_bounded_we},
      {6, "rees-quotient-contract", criterion_rees_contract},
      {7, "implication-ladder", criterion_implication_ladder},
      {8, "proposition-battery", criterion_proposition_battery},
  };

  int failures = 0;
  for (auto& c : criteria) {
    auto start = std::chrono::steady_clock::now();
    std::string detail;
    bool ok = false;
    try {
      ok = c.run(detail);
    } catch (const std::exception& e) {
      detail = std::string("exception: ") + e.what();
    }
    double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    std::printf("[%s] %d %s: %s (%.1fs)\n", ok ? "PASS" : "FAIL", c.number, c.name.c_str(), detail.c_str(),
                secs);
    std::fflush(stdout);
    if (!ok) ++failures;
  }
  if (failures) std::printf("%d of %zu criteria failed\n", failures, criteria.size());
  return failures == 0 ? 0 : 1;
}
