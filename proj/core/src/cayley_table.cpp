#include "semidelta/cayley_table.hpp"

#include <cassert>
#include <stdexcept>

#include "semidelta/errors.hpp"

namespace semidelta {

namespace {

void check_shape(int order, const std::vector<int>& entries) {
  if (order < 1) throw ParseError("table order must be positive");
  if (order > ElemSet::max_order)
    throw SizeLimitExceeded("table order " + std::to_string(order) + " exceeds the supported maximum " +
                            std::to_string(ElemSet::max_order));
  if (entries.size() != static_cast<std::size_t>(order) * order)
    throw ParseError("entry count does not match order*order");
}

void check_axioms(int n, const std::vector<int>& e) {
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b) {
      int v = e[static_cast<std::size_t>(a) * n + b];
      if (v < 0 || v >= n) throw ClosureViolation(a, b, v);
    }
  auto at = [&](int a, int b) { return e[static_cast<std::size_t>(a) * n + b]; };
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b)
      for (int c = 0; c < n; ++c)
        if (at(at(a, b), c) != at(a, at(b, c))) throw AssociativityViolation(a, b, c);
}

}  // namespace

CayleyTable::CayleyTable(int order, std::vector<int> entries) : order_(order), entries_(std::move(entries)) {
  check_shape(order_, entries_);
  check_axioms(order_, entries_);
}

CayleyTable::CayleyTable(trusted_tag, int order, std::vector<int> entries)
    : order_(order), entries_(std::move(entries)) {
  check_shape(order_, entries_);
#ifndef NDEBUG
  check_axioms(order_, entries_);
#endif
}

CayleyTable CayleyTable::trusted(int order, std::vector<int> entries) {
  return CayleyTable(trusted_tag{}, order, std::move(entries));
}

CayleyTable CayleyTable::transpose() const {
  std::vector<int> e(entries_.size());
  for (int a = 0; a < order_; ++a)
    for (int b = 0; b < order_; ++b) e[static_cast<std::size_t>(b) * order_ + a] = at(a, b);
  return trusted(order_, std::move(e));
}

int power(const CayleyTable& t, int a, int k) {
  assert(k >= 1);
  int acc = a;
  for (int i = 1; i < k; ++i) acc = t.at(acc, a);
  return acc;
}

PowerProfile power_profile(const CayleyTable& t, int a) {
  // The sequence a, a^2, ... is an iterated map, so the first repeated
  // value marks both the minimal index and the minimal period.
  std::vector<int> first_seen(static_cast<std::size_t>(t.order()), 0);
  int cur = a;
  for (int k = 1;; ++k) {
    if (first_seen[static_cast<std::size_t>(cur)] != 0) {
      int i = first_seen[static_cast<std::size_t>(cur)];
      return PowerProfile{a, i, k - i};
    }
    first_seen[static_cast<std::size_t>(cur)] = k;
    cur = t.at(cur, a);
  }
}

std::optional<int> find_identity(const CayleyTable& t) {
  int n = t.order();
  for (int e = 0; e < n; ++e) {
    bool ok = true;
    for (int x = 0; x < n && ok; ++x) ok = t.at(e, x) == x && t.at(x, e) == x;
    if (ok) return e;
  }
  return std::nullopt;
}

std::optional<int> find_zero(const CayleyTable& t) {
  int n = t.order();
  for (int z = 0; z < n; ++z) {
    bool ok = true;
    for (int x = 0; x < n && ok; ++x) ok = t.at(z, x) == z && t.at(x, z) == z;
    if (ok) return z;
  }
  return std::nullopt;
}

MonoidView::MonoidView(const CayleyTable& base) : base_(&base) {
  auto e = find_identity(base);
  synthetic_ = !e.has_value();
  if (e) existing_ = *e;
}

CayleyTable MonoidView::materialize() const {
  if (!synthetic_) return *base_;
  int m = size();
  std::vector<int> e(static_cast<std::size_t>(m) * m);
  for (int x = 0; x < m; ++x)
    for (int y = 0; y < m; ++y) e[static_cast<std::size_t>(x) * m + y] = product(x, y);
  return CayleyTable::trusted(m, std::move(e));
}

CayleyTable adjoin_zero(const CayleyTable& t) {
  int n = t.order();
  int m = n + 1;
  std::vector<int> e(static_cast<std::size_t>(m) * m, n);
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b) e[static_cast<std::size_t>(a) * m + b] = t.at(a, b);
  return CayleyTable::trusted(m, std::move(e));
}

ElemSet subsemigroup_closure(const CayleyTable& t, ElemSet seed) {
  if (seed.empty()) throw std::invalid_argument("subsemigroup_closure: empty seed");
  ElemSet closed = seed;
  bool grew = true;
  while (grew) {
    grew = false;
    ElemSet next = closed;
    closed.for_each([&](int a) {
      closed.for_each([&](int b) { next.insert(t.at(a, b)); });
    });
    if (!(next == closed)) {
      closed = next;
      grew = true;
    }
  }
  return closed;
}

bool is_ideal(const CayleyTable& t, ElemSet candidate) {
  if (candidate.empty()) throw std::invalid_argument("is_ideal: empty candidate");
  int n = t.order();
  bool ok = true;
  candidate.for_each([&](int x) {
    for (int s = 0; s < n; ++s)
      if (!candidate.contains(t.at(s, x)) || !candidate.contains(t.at(x, s))) ok = false;
  });
  return ok;
}

ReesQuotient rees_quotient(const CayleyTable& t, ElemSet ideal) {
  if (ideal.empty() || !is_ideal(t, ideal)) throw NotAnIdeal("rees_quotient: argument is not a nonempty two-sided ideal");
  int n = t.order();
  int m = n - ideal.size() + 1;
  std::vector<int> map(static_cast<std::size_t>(n));
  int next = 1;
  for (int x = 0; x < n; ++x) map[static_cast<std::size_t>(x)] = ideal.contains(x) ? 0 : next++;
  std::vector<int> e(static_cast<std::size_t>(m) * m, 0);
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b) {
      int qa = map[static_cast<std::size_t>(a)], qb = map[static_cast<std::size_t>(b)];
      if (qa == 0 || qb == 0) continue;  // products with the collapsed class are zero
      e[static_cast<std::size_t>(qa) * m + qb] = map[static_cast<std::size_t>(t.at(a, b))];
    }
  return ReesQuotient{CayleyTable::trusted(m, std::move(e)), std::move(map)};
}

Subtable restrict_to(const CayleyTable& t, ElemSet closed) {
  std::vector<int> elems = closed.to_vector();
  int m = static_cast<int>(elems.size());
  if (m == 0) throw std::invalid_argument("restrict_to: empty subset");
  std::vector<int> pos(static_cast<std::size_t>(t.order()), -1);
  for (int i = 0; i < m; ++i) pos[static_cast<std::size_t>(elems[static_cast<std::size_t>(i)])] = i;
  std::vector<int> e(static_cast<std::size_t>(m) * m);
  for (int i = 0; i < m; ++i)
    for (int j = 0; j < m; ++j) {
      int p = t.at(elems[static_cast<std::size_t>(i)], elems[static_cast<std::size_t>(j)]);
      int q = pos[static_cast<std::size_t>(p)];
      if (q < 0) throw std::invalid_argument("restrict_to: subset is not product-closed");
      e[static_cast<std::size_t>(i) * m + j] = q;
    }
  return Subtable{CayleyTable::trusted(m, std::move(e)), std::move(elems)};
}

}  // namespace semidelta
