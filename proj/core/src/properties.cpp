#include "semidelta/properties.hpp"

#include <algorithm>
#include <cctype>
#include <numeric>

#include "semidelta/errors.hpp"

namespace semidelta {

bool is_nil(const CayleyTable& t) {
  auto zero = find_zero(t);
  if (!zero) return false;
  for (int a = 0; a < t.order(); ++a) {
    PowerProfile pp = power_profile(t, a);
    // Powers reach the zero iff the periodic part is the fixed zero.
    if (pp.period != 1 || power(t, a, pp.index) != *zero) return false;
  }
  return true;
}

namespace {

long long lcm3(long long a, long long b, long long c) { return std::lcm(std::lcm(a, b), c); }

// pw[k] = x^k for k in 1..max_k.
std::vector<int> power_table(const CayleyTable& t, int x, int max_k) {
  std::vector<int> pw(static_cast<std::size_t>(max_k) + 1);
  pw[1] = x;
  for (int k = 2; k <= max_k; ++k) pw[static_cast<std::size_t>(k)] = t.at(pw[static_cast<std::size_t>(k - 1)], x);
  return pw;
}

}  // namespace

WeCheck is_weakly_exponential(const CayleyTable& t) {
  int n_elems = t.order();
  std::vector<PowerProfile> prof;
  prof.reserve(static_cast<std::size_t>(n_elems));
  for (int x = 0; x < n_elems; ++x) prof.push_back(power_profile(t, x));

  for (int a = 0; a < n_elems; ++a)
    for (int b = 0; b < n_elems; ++b) {
      int ab = t.at(a, b);
      const PowerProfile &pa = prof[static_cast<std::size_t>(a)], &pb = prof[static_cast<std::size_t>(b)],
                         &pc = prof[static_cast<std::size_t>(ab)];
      int i_max = std::max({pa.index, pb.index, pc.index});
      long long period = lcm3(pa.period, pb.period, pc.period);
      int n_hi = i_max + static_cast<int>(period);
      int m_hi = pc.index + pc.period;

      std::vector<int> apw = power_table(t, a, n_hi);
      std::vector<int> bpw = power_table(t, b, n_hi);
      std::vector<int> cpw = power_table(t, ab, n_hi + m_hi);

      for (int n = 1; n <= n_hi; ++n) {
        int anbn = t.at(apw[static_cast<std::size_t>(n)], bpw[static_cast<std::size_t>(n)]);
        bool balanced = false;
        for (int m = 0; m <= m_hi && !balanced; ++m) {
          int lhs = cpw[static_cast<std::size_t>(n + m)];
          int rhs1 = (m == 0) ? anbn : t.at(anbn, cpw[static_cast<std::size_t>(m)]);
          int rhs2 = (m == 0) ? anbn : t.at(cpw[static_cast<std::size_t>(m)], anbn);
          balanced = lhs == rhs1 && lhs == rhs2;
        }
        if (!balanced) return WeCheck{false, WeCheck::Witness{a, b, n}};
      }
    }
  return WeCheck{true, std::nullopt};
}

RCommCheck is_r_commutative(const CayleyTable& t) {
  MonoidView m(t);
  int n = t.order();
  for (int s = 0; s < n; ++s)
    for (int u = 0; u < n; ++u) {
      int st = t.at(s, u);
      int ts = t.at(u, s);
      bool found = false;
      for (int r = 0; r < m.size() && !found; ++r) found = m.product(ts, r) == st;
      if (!found) return RCommCheck{false, std::make_pair(s, u)};
    }
  return RCommCheck{true, std::nullopt};
}

IdentitySpec IdentitySpec::parse(std::string_view text) {
  auto eq = text.find('=');
  if (eq == std::string_view::npos) throw ParseError("identity must contain '='");
  std::string_view left = text.substr(0, eq), right = text.substr(eq + 1);
  if (left.empty() || right.empty()) throw ParseError("both sides of the identity must be nonempty");

  IdentitySpec spec;
  std::vector<char> letters;
  auto var_of = [&](char c) {
    if (!std::isalpha(static_cast<unsigned char>(c)))
      throw ParseError(std::string("invalid variable character '") + c + "'");
    auto it = std::find(letters.begin(), letters.end(), c);
    if (it == letters.end()) {
      letters.push_back(c);
      return static_cast<int>(letters.size()) - 1;
    }
    return static_cast<int>(it - letters.begin());
  };
  for (char c : left) spec.lhs.push_back(var_of(c));
  for (char c : right) spec.rhs.push_back(var_of(c));
  spec.variable_count = static_cast<int>(letters.size());
  return spec;
}

IdentitySpec IdentitySpec::medial() { return parse("axyb=ayxb"); }
IdentitySpec IdentitySpec::left_commutative() { return parse("xya=yxa"); }
IdentitySpec IdentitySpec::right_commutative() { return parse("axy=ayx"); }

namespace {

int eval_word(const CayleyTable& t, const std::vector<int>& word, const std::vector<int>& vals) {
  int acc = vals[static_cast<std::size_t>(word[0])];
  for (std::size_t i = 1; i < word.size(); ++i) acc = t.at(acc, vals[static_cast<std::size_t>(word[i])]);
  return acc;
}

// Advances a base-n odometer; false once it wraps to all zeros.
bool next_assignment(std::vector<int>& vals, int n) {
  for (std::size_t i = vals.size(); i-- > 0;) {
    if (++vals[i] < n) return true;
    vals[i] = 0;
  }
  return false;
}

}  // namespace

IdentityCheck satisfies_identity(const CayleyTable& t, const IdentitySpec& spec) {
  if (spec.lhs.empty() || spec.rhs.empty() || spec.variable_count < 1)
    throw ParseError("malformed identity spec");
  std::vector<int> vals(static_cast<std::size_t>(spec.variable_count), 0);
  do {
    if (eval_word(t, spec.lhs, vals) != eval_word(t, spec.rhs, vals)) return IdentityCheck{false, vals};
  } while (next_assignment(vals, t.order()));
  return IdentityCheck{true, std::nullopt};
}

PermutativeCheck is_permutative(const CayleyTable& t, int max_degree) {
  int n = t.order();
  for (int k = 2; k <= max_degree; ++k) {
    // Left-hand values of all n^k assignments, reused across permutations.
    std::vector<int> lhs_vals;
    std::vector<int> vals(static_cast<std::size_t>(k), 0);
    do {
      int acc = vals[0];
      for (int i = 1; i < k; ++i) acc = t.at(acc, vals[static_cast<std::size_t>(i)]);
      lhs_vals.push_back(acc);
    } while (next_assignment(vals, n));

    std::vector<int> sigma(static_cast<std::size_t>(k));
    std::iota(sigma.begin(), sigma.end(), 0);
    while (std::next_permutation(sigma.begin(), sigma.end())) {
      std::fill(vals.begin(), vals.end(), 0);
      std::size_t idx = 0;
      bool all_equal = true;
      do {
        int acc = vals[static_cast<std::size_t>(sigma[0])];
        for (int i = 1; i < k; ++i) acc = t.at(acc, vals[static_cast<std::size_t>(sigma[static_cast<std::size_t>(i)])]);
        if (acc != lhs_vals[idx]) {
          all_equal = false;
          break;
        }
        ++idx;
      } while (next_assignment(vals, n));
      if (all_equal) return PermutativeCheck{true, k, sigma, max_degree};
    }
  }
  return PermutativeCheck{false, 0, {}, max_degree};
}

namespace {

bool is_group_table(const CayleyTable& t) {
  auto e = find_identity(t);
  if (!e) return false;
  int n = t.order();
  for (int a = 0; a < n; ++a) {
    bool invertible = false;
    for (int b = 0; b < n && !invertible; ++b) invertible = t.at(a, b) == *e && t.at(b, a) == *e;
    if (!invertible) return false;
  }
  return true;
}

bool is_cyclic(const CayleyTable& t) {
  for (int g = 0; g < t.order(); ++g)
    if (subsemigroup_closure(t, ElemSet::single(g)) == ElemSet::full(t.order())) return true;
  return false;
}

}  // namespace

PGroupCheck cyclic_p_group_parameters(const CayleyTable& t) {
  if (!is_group_table(t) || !is_cyclic(t)) return PGroupCheck{false, std::nullopt, 0};
  int n = t.order();
  if (n == 1) return PGroupCheck{true, std::nullopt, 0};
  int p = 2;
  while (n % p != 0) ++p;
  int k = 0, rest = n;
  while (rest % p == 0) {
    rest /= p;
    ++k;
  }
  if (rest != 1) return PGroupCheck{false, std::nullopt, 0};
  return PGroupCheck{true, p, k};
}

SpecialFlags recognize_special(const CayleyTable& t) {
  SpecialFlags f;
  int n = t.order();

  f.left_zero = f.right_zero = f.commutative = true;
  bool band = true, rect_law = true;
  for (int x = 0; x < n; ++x) {
    if (t.at(x, x) != x) band = false;
    for (int y = 0; y < n; ++y) {
      if (t.at(x, y) != x) f.left_zero = false;
      if (t.at(x, y) != y) f.right_zero = false;
      if (t.at(x, y) != t.at(y, x)) f.commutative = false;
      for (int z = 0; z < n; ++z)
        if (t.at(t.at(x, y), z) != t.at(x, z)) rect_law = false;
    }
  }
  f.rectangular_band = band && rect_law;

  f.group = is_group_table(t);
  f.cyclic_p_group = cyclic_p_group_parameters(t).is_cyclic_p_group;

  if (auto z = find_zero(t); z && n >= 2) {
    ElemSet nonzero = ElemSet::full(n);
    nonzero.erase(*z);
    bool closed = true;
    nonzero.for_each([&](int a) {
      nonzero.for_each([&](int b) {
        if (!nonzero.contains(t.at(a, b))) closed = false;
      });
    });
    if (closed) f.group_with_zero = is_group_table(restrict_to(t, nonzero).table);
  }
  return f;
}

}  // namespace semidelta
