#include "semidelta/green.hpp"

#include <algorithm>
#include <numeric>

namespace semidelta {

ElemSet principal_ideal(const CayleyTable& t, int a) {
  MonoidView m(t);
  int sz = m.size();
  ElemSet out;
  for (int x = 0; x < sz; ++x) {
    int xa = m.product(x, a);
    for (int y = 0; y < sz; ++y) out.insert(m.product(xa, y));
  }
  return out;
}

ElemSet j_class(const CayleyTable& t, int a) {
  ElemSet ja = principal_ideal(t, a);
  ElemSet out;
  for (int s = 0; s < t.order(); ++s)
    if (principal_ideal(t, s) == ja) out.insert(s);
  return out;
}

ElemSet i_set(const CayleyTable& t, int a) { return principal_ideal(t, a) - j_class(t, a); }

ChainCheck ideals_form_chain(const CayleyTable& t) {
  int n = t.order();
  std::vector<ElemSet> ideals(static_cast<std::size_t>(n));
  for (int a = 0; a < n; ++a) ideals[static_cast<std::size_t>(a)] = principal_ideal(t, a);
  for (int a = 0; a < n; ++a)
    for (int b = a + 1; b < n; ++b) {
      const ElemSet &ia = ideals[static_cast<std::size_t>(a)], &ib = ideals[static_cast<std::size_t>(b)];
      if (!ia.subset_of(ib) && !ib.subset_of(ia)) return ChainCheck{false, std::make_pair(a, b)};
    }
  return ChainCheck{true, std::nullopt};
}

JStructure j_structure(const CayleyTable& t) {
  int n = t.order();
  JStructure js;
  js.principal_ideal_of.resize(static_cast<std::size_t>(n));
  for (int a = 0; a < n; ++a) js.principal_ideal_of[static_cast<std::size_t>(a)] = principal_ideal(t, a);

  // Group elements by principal ideal.
  std::vector<int> elems(static_cast<std::size_t>(n));
  std::iota(elems.begin(), elems.end(), 0);
  std::stable_sort(elems.begin(), elems.end(), [&](int a, int b) {
    const ElemSet &ia = js.principal_ideal_of[static_cast<std::size_t>(a)],
                  &ib = js.principal_ideal_of[static_cast<std::size_t>(b)];
    if (ia.size() != ib.size()) return ia.size() < ib.size();
    if (!(ia == ib)) return ia.bits() < ib.bits();
    return a < b;
  });

  js.j_class_of.assign(static_cast<std::size_t>(n), -1);
  for (int e : elems) {
    const ElemSet& ideal = js.principal_ideal_of[static_cast<std::size_t>(e)];
    if (!js.class_ideal.empty() && js.class_ideal.back() == ideal) {
      js.j_classes.back().insert(e);
    } else {
      js.class_ideal.push_back(ideal);
      js.j_classes.push_back(ElemSet::single(e));
    }
    js.j_class_of[static_cast<std::size_t>(e)] = static_cast<int>(js.j_classes.size()) - 1;
  }

  ChainCheck c = ideals_form_chain(t);
  js.chain_ordered = c.chain;
  js.chain_witness = c.witness;
  return js;
}

}  // namespace semidelta
