#include "semidelta/structure.hpp"

#include <algorithm>

#include "semidelta/errors.hpp"
#include "semidelta/green.hpp"

namespace semidelta {

std::string to_string(TKind k) {
  switch (k) {
    case TKind::T1: return "T1";
    case TKind::T2R: return "T2R";
    case TKind::T2L: return "T2L";
  }
  return "?";
}

std::string to_string(Template tp) {
  switch (tp) {
    case Template::G: return "G";
    case Template::G0: return "G0";
    case Template::B: return "B";
    case Template::B0: return "B0";
    case Template::B1: return "B1";
    case Template::NilChain: return "NIL_CHAIN";
    case Template::T1: return "T1";
    case Template::T2R: return "T2R";
    case Template::T2L: return "T2L";
    case Template::NotWeDelta: return "NOT_WE_DELTA";
  }
  return "?";
}

namespace {

ElemSet product_set(const CayleyTable& t, ElemSet a, ElemSet b) {
  ElemSet out;
  a.for_each([&](int x) { b.for_each([&](int y) { out.insert(t.at(x, y)); }); });
  return out;
}

T2Decomposition::Flags evaluate_flags(const CayleyTable& t, ElemSet s0, ElemSet s1, bool delta) {
  T2Decomposition::Flags f;
  f.is_delta = delta;
  f.s1_law_ok = true;  // producers only emit pairs satisfying the band law
  f.s0_nontrivial = s0.size() >= 2;
  ElemSet cross = product_set(t, s0, s1) | product_set(t, s1, s0) | product_set(t, s0, s0);
  f.products_into_s0 = cross.subset_of(s0);
  if (!s0.empty() && product_set(t, s0, s0).subset_of(s0))
    f.s0_nil = is_nil(restrict_to(t, s0).table);
  return f;
}

}  // namespace

std::vector<T2Decomposition> find_t2_decompositions(const CayleyTable& t) {
  int n = t.order();
  bool delta = is_delta(t).is_delta;
  ElemSet all = ElemSet::full(n);
  std::vector<T2Decomposition> out;

  auto emit = [&](int u, int v, TKind kind) {
    ElemSet s1 = ElemSet::single(u);
    s1.insert(v);
    T2Decomposition d{all - s1, u, v, kind, {}};
    d.flags = evaluate_flags(t, d.s0, s1, delta);
    out.push_back(std::move(d));
  };

  for (int e = 0; e < n; ++e)
    if (t.at(e, e) == e) emit(e, e, TKind::T1);
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v) {
      if (t.at(u, u) != u || t.at(v, v) != v) continue;
      if (t.at(u, v) == v && t.at(v, u) == u) emit(u, v, TKind::T2R);
      if (t.at(u, v) == u && t.at(v, u) == v) emit(u, v, TKind::T2L);
    }
  return out;
}

std::optional<T2Decomposition> recognize_t2(const CayleyTable& t, TKind kind) {
  for (const auto& d : find_t2_decompositions(t))
    if (d.kind == kind && d.flags.all()) return d;
  return std::nullopt;
}

T2rConditionReport t2r_condition_report(const CayleyTable& t, const T2Decomposition& d, bool corrected_guard) {
  int n = t.order();
  ElemSet s1 = d.s1();
  if (!((d.s0 | s1) == ElemSet::full(n)) || !(d.s0 & s1).empty())
    throw PartitionMismatch("t2r_condition_report: s0 and s1 do not partition the elements");

  T2rConditionReport report;
  report.corrected_guard = corrected_guard;
  auto& [c1, c2, c3, c4, c5] = report.conditions;

  // (1) semilattice of a non-trivial nil S0 and a two-element right-zero
  // S1; S0 absorbs every mixed product.
  {
    c1.holds = true;
    bool rz_pair = d.u != d.v && t.at(d.u, d.u) == d.u && t.at(d.v, d.v) == d.v && t.at(d.u, d.v) == d.v &&
                   t.at(d.v, d.u) == d.u;
    ElemSet absorbed = product_set(t, d.s0, s1) | product_set(t, s1, d.s0) | product_set(t, d.s0, d.s0);
    bool into_s0 = absorbed.subset_of(d.s0);
    bool nil_ok = !d.s0.empty() && product_set(t, d.s0, d.s0).subset_of(d.s0) && is_nil(restrict_to(t, d.s0).table);
    bool nontrivial = d.s0.size() >= 2;
    if (!rz_pair || !into_s0 || !nil_ok || !nontrivial) {
      c1.holds = false;
      c1.witness = {d.u, d.v};
    }
  }

  // (2) ideals form a chain.
  {
    ChainCheck chain = ideals_form_chain(t);
    c2.holds = chain.chain;
    if (chain.witness) c2.witness = {chain.witness->first, chain.witness->second};
  }

  MonoidView m(t);
  int msz = m.size();

  // (3) for b in S0: b in b*S1, or b*S1 inside S^1*b*S0.
  {
    c3.holds = true;
    c3.vacuous = d.s0.empty();
    d.s0.for_each([&](int b) {
      if (!c3.holds) return;
      ElemSet b_s1 = product_set(t, ElemSet::single(b), s1);
      if (b_s1.contains(b)) return;
      ElemSet sub;  // S^1 * b * S0
      for (int x = 0; x < msz; ++x) {
        int xb = m.product(x, b);
        d.s0.for_each([&](int y) { sub.insert(t.at(xb, y)); });
      }
      if (!b_s1.subset_of(sub)) {
        c3.holds = false;
        c3.witness = {b};
      }
    });
  }

  // (4) for b in S0: {b} = S1*b, or S1*b meets S0*b*S^1 u S^1*b*S0.
  {
    c4.holds = true;
    c4.vacuous = d.s0.empty();
    d.s0.for_each([&](int b) {
      if (!c4.holds) return;
      ElemSet s1_b = product_set(t, s1, ElemSet::single(b));
      if (s1_b == ElemSet::single(b)) return;
      ElemSet reach;
      d.s0.for_each([&](int x) {
        int xb = t.at(x, b);
        for (int y = 0; y < msz; ++y) reach.insert(m.product(xb, y));
      });
      for (int x = 0; x < msz; ++x) {
        int xb = m.product(x, b);
        d.s0.for_each([&](int y) { reach.insert(t.at(xb, y)); });
      }
      if ((s1_b & reach).empty()) {
        c4.holds = false;
        c4.witness = {b};
      }
    });
  }

  // (5) two-element J-classes with something other than a bare zero
  // below must be spread apart by some translation pair.
  {
    c5.holds = true;
    c5.vacuous = true;
    auto zero = find_zero(t);
    for (int b = 0; b < n && c5.holds; ++b) {
      ElemSet jb = j_class(t, b);
      if (jb.size() != 2 || jb.min() != b) continue;  // evaluate each class once
      ElemSet ib = principal_ideal(t, b) - jb;
      if (ib.empty()) continue;
      if (corrected_guard && zero && ib == ElemSet::single(*zero)) continue;
      ElemSet checked = ib;
      checked.for_each([&](int a) {
        if (!c5.holds) return;
        c5.vacuous = false;
        ElemSet ja = j_class(t, a);
        bool found = false;
        for (int x = 0; x < msz && !found; ++x)
          for (int y = 0; y < msz && !found; ++y) {
            ElemSet xjby;
            jb.for_each([&](int f) { xjby.insert(m.product(x, m.product(f, y))); });
            found = !(xjby & ja).empty() && !xjby.subset_of(ja);
          }
        if (!found) {
          c5.holds = false;
          c5.witness = {b, a};
        }
      });
    }
    if (!c5.holds) c5.vacuous = false;
  }

  return report;
}

T2rNecessaryReport t2r_necessary_propositions(const CayleyTable& t, const T2Decomposition& d) {
  bool rz_pair = d.kind == TKind::T2R && d.u != d.v && t.at(d.u, d.u) == d.u && t.at(d.v, d.v) == d.v &&
                 t.at(d.u, d.v) == d.v && t.at(d.v, d.u) == d.u;
  if (!rz_pair) throw NotT2RShaped("t2r_necessary_propositions: candidate is not a right-zero split");

  int n = t.order();
  ElemSet s1 = d.s1();
  T2rNecessaryReport report;
  report.degenerate = d.s0.size() < 2;
  auto zero = find_zero(t);
  MonoidView m(t);
  int msz = m.size();

  std::vector<ElemSet> jcls(static_cast<std::size_t>(n)), ideals(static_cast<std::size_t>(n));
  for (int x = 0; x < n; ++x) {
    ideals[static_cast<std::size_t>(x)] = principal_ideal(t, x);
    jcls[static_cast<std::size_t>(x)] = j_class(t, x);
  }

  // P2: around a two-element J-class lying directly over the zero, all
  // two-sided translates behave rigidly.
  {
    report.p2.verdict = CheckOutcome::Verdict::vacuous;
    for (int b = 0; b < n; ++b) {
      const ElemSet& jb = jcls[static_cast<std::size_t>(b)];
      if (jb.size() != 2 || jb.min() != b) continue;
      ElemSet ib = ideals[static_cast<std::size_t>(b)] - jb;
      if (!zero || !(ib == ElemSet::single(*zero))) continue;
      if (report.p2.verdict == CheckOutcome::Verdict::vacuous) report.p2.verdict = CheckOutcome::Verdict::pass;

      for (int x = 0; x < msz && report.p2.passed(); ++x)
        for (int y = 0; y < msz; ++y) {
          ElemSet xjby;
          jb.for_each([&](int f) { xjby.insert(m.product(x, m.product(f, y))); });
          if (xjby.contains(*zero) && !(xjby == ElemSet::single(*zero))) {
            report.p2.verdict = CheckOutcome::Verdict::fail;
            report.p2.witness = {b, x, y};
            break;
          }
        }
      if (!report.p2.passed()) break;

      ElemSet jb_s0 = product_set(t, jb, d.s0), s0_jb = product_set(t, d.s0, jb);
      if (!d.s0.empty() && (!(jb_s0 == ElemSet::single(*zero)) || !(s0_jb == ElemSet::single(*zero)))) {
        report.p2.verdict = CheckOutcome::Verdict::fail;
        report.p2.witness = {b};
        break;
      }
      ElemSet s1_jb = product_set(t, s1, jb);
      if (!(s1_jb == ElemSet::single(*zero)) && !(s1_jb == jb)) {
        report.p2.verdict = CheckOutcome::Verdict::fail;
        report.p2.witness = {b};
        break;
      }
    }
  }

  // C3: for b in S0 with a two-element J-class, products of J_b with the
  // split pieces stay below the class.
  {
    report.c3.verdict = CheckOutcome::Verdict::vacuous;
    ElemSet guard;
    d.s0.for_each([&](int b) {
      if (jcls[static_cast<std::size_t>(b)].size() == 2) guard.insert(b);
    });
    guard.for_each([&](int b) {
      if (report.c3.verdict == CheckOutcome::Verdict::fail) return;
      report.c3.verdict = CheckOutcome::Verdict::pass;
      const ElemSet& jb = jcls[static_cast<std::size_t>(b)];
      ElemSet ib = ideals[static_cast<std::size_t>(b)] - jb;
      ElemSet s0_jb = product_set(t, d.s0, jb), jb_s0 = product_set(t, jb, d.s0),
              s1_jb = product_set(t, s1, jb);
      bool ok = s0_jb.subset_of(ib) && jb_s0.subset_of(ib) && (s1_jb.subset_of(ib) || s1_jb == jb);
      if (!ok) {
        report.c3.verdict = CheckOutcome::Verdict::fail;
        report.c3.witness = {b};
      }
    });
  }

  // P4: some b in S0 has a two-element J-class.
  {
    report.p4.verdict = CheckOutcome::Verdict::fail;
    d.s0.for_each([&](int b) {
      if (report.p4.verdict == CheckOutcome::Verdict::pass) return;
      if (jcls[static_cast<std::size_t>(b)].size() == 2) {
        report.p4.verdict = CheckOutcome::Verdict::pass;
        report.p4.witness = {b};
      }
    });
  }

  // P6: some b in S0 is moved by both u and v.
  {
    report.p6.verdict = CheckOutcome::Verdict::fail;
    d.s0.for_each([&](int b) {
      if (report.p6.verdict == CheckOutcome::Verdict::pass) return;
      if (t.at(d.u, b) != b && t.at(d.v, b) != b) {
        report.p6.verdict = CheckOutcome::Verdict::pass;
        report.p6.witness = {b};
      }
    });
  }

  // P7: S0 squared is all of S0; witnesses are the missing elements.
  {
    ElemSet sq = product_set(t, d.s0, d.s0);
    if (sq == d.s0) {
      report.p7.verdict = CheckOutcome::Verdict::pass;
    } else {
      report.p7.verdict = CheckOutcome::Verdict::fail;
      report.p7.witness = (d.s0 - sq).to_vector();
    }
  }

  return report;
}

namespace {

struct TemplateMatch {
  std::optional<int> p, k;
  std::optional<bool> right_oriented;
  std::optional<T2Decomposition> decomposition;
};

std::optional<TemplateMatch> match_g(const CayleyTable& t) {
  PGroupCheck g = cyclic_p_group_parameters(t);
  if (!g.is_cyclic_p_group) return std::nullopt;
  TemplateMatch m;
  m.p = g.prime;
  m.k = g.exponent;
  return m;
}

std::optional<TemplateMatch> match_g0(const CayleyTable& t) {
  auto zero = find_zero(t);
  if (!zero || t.order() < 2) return std::nullopt;
  ElemSet nonzero = ElemSet::full(t.order());
  nonzero.erase(*zero);
  if (!product_set(t, nonzero, nonzero).subset_of(nonzero)) return std::nullopt;
  return match_g(restrict_to(t, nonzero).table);
}

std::optional<TemplateMatch> match_b(const CayleyTable& t) {
  if (t.order() != 2) return std::nullopt;
  SpecialFlags f = recognize_special(t);
  if (!f.rectangular_band) return std::nullopt;
  TemplateMatch m;
  m.right_oriented = f.right_zero;
  return m;
}

std::optional<TemplateMatch> match_b0(const CayleyTable& t) {
  auto zero = find_zero(t);
  if (t.order() != 3 || !zero) return std::nullopt;
  ElemSet rest = ElemSet::full(3);
  rest.erase(*zero);
  if (!product_set(t, rest, rest).subset_of(rest)) return std::nullopt;
  return match_b(restrict_to(t, rest).table);
}

std::optional<TemplateMatch> match_b1(const CayleyTable& t) {
  auto e = find_identity(t);
  if (t.order() != 3 || !e) return std::nullopt;
  ElemSet rest = ElemSet::full(3);
  rest.erase(*e);
  if (!product_set(t, rest, rest).subset_of(rest)) return std::nullopt;
  return match_b(restrict_to(t, rest).table);
}

std::optional<TemplateMatch> match_nil_chain(const CayleyTable& t) {
  if (t.order() < 2 || !is_nil(t) || !ideals_form_chain(t).chain) return std::nullopt;
  return TemplateMatch{};
}

std::optional<TemplateMatch> match_t(const CayleyTable& t, TKind kind) {
  auto d = recognize_t2(t, kind);
  if (!d) return std::nullopt;
  TemplateMatch m;
  m.decomposition = *d;
  return m;
}

using Matcher = std::optional<TemplateMatch> (*)(const CayleyTable&);

constexpr std::pair<Template, Matcher> kMatchers[] = {
    {Template::G, match_g},
    {Template::G0, match_g0},
    {Template::B, match_b},
    {Template::B0, match_b0},
    {Template::B1, match_b1},
    {Template::NilChain, match_nil_chain},
    {Template::T1, [](const CayleyTable& t) { return match_t(t, TKind::T1); }},
    {Template::T2R, [](const CayleyTable& t) { return match_t(t, TKind::T2R); }},
    {Template::T2L, [](const CayleyTable& t) { return match_t(t, TKind::T2L); }},
};

}  // namespace

ClassificationResult classify_we_delta(const CayleyTable& t) {
  ClassificationResult r{};
  WeCheck we = is_weakly_exponential(t);
  DeltaCheck delta = is_delta(t);
  if (!we.holds || !delta.is_delta) {
    r.tmpl = Template::NotWeDelta;
    r.we_check = std::move(we);
    r.delta_check = std::move(delta);
    return r;
  }
  for (const auto& [tmpl, matcher] : kMatchers) {
    if (auto m = matcher(t)) {
      r.tmpl = tmpl;
      r.p = m->p;
      r.k = m->k;
      r.right_oriented = m->right_oriented;
      r.decomposition = m->decomposition;
      return r;
    }
  }
  throw ClassificationGap("weakly exponential chain-congruence table of order " + std::to_string(t.order()) +
                          " matches no template; this falsifies the classification");
}

int count_matching_templates(const CayleyTable& t) {
  int count = 0;
  for (const auto& [tmpl, matcher] : kMatchers)
    if (matcher(t)) ++count;
  return count;
}

}  // namespace semidelta
