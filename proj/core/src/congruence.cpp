#include "semidelta/congruence.hpp"

#include <algorithm>
#include <deque>
#include <unordered_set>

#include "semidelta/errors.hpp"

namespace semidelta {

namespace {

// Union-find with a worklist: whenever two classes merge, the merged
// pair is queued and all its left/right translates are merged in turn.
class CongruenceCloser {
 public:
  explicit CongruenceCloser(const CayleyTable& t) : t_(t), parent_(static_cast<std::size_t>(t.order())) {
    for (int i = 0; i < t.order(); ++i) parent_[static_cast<std::size_t>(i)] = i;
  }

  void relate(int a, int b) {
    merge(a, b);
    drain();
  }

  Partition result() {
    std::vector<int> map(parent_.size());
    for (int x = 0; x < t_.order(); ++x) map[static_cast<std::size_t>(x)] = find(x);
    return Partition::from_class_map(std::move(map));
  }

 private:
  int find(int x) {
    while (parent_[static_cast<std::size_t>(x)] != x) {
      parent_[static_cast<std::size_t>(x)] = parent_[static_cast<std::size_t>(parent_[static_cast<std::size_t>(x)])];
      x = parent_[static_cast<std::size_t>(x)];
    }
    return x;
  }

  void merge(int a, int b) {
    int ra = find(a), rb = find(b);
    if (ra == rb) return;
    if (ra > rb) std::swap(ra, rb);
    parent_[static_cast<std::size_t>(rb)] = ra;
    pending_.push_back({a, b});
  }

  void drain() {
    while (!pending_.empty()) {
      auto [x, y] = pending_.front();
      pending_.pop_front();
      for (int s = 0; s < t_.order(); ++s) {
        merge(t_.at(s, x), t_.at(s, y));
        merge(t_.at(x, s), t_.at(y, s));
      }
    }
  }

  const CayleyTable& t_;
  std::vector<int> parent_;
  std::deque<std::pair<int, int>> pending_;
};

}  // namespace

Partition principal_congruence(const CayleyTable& t, int a, int b) {
  CongruenceCloser closer(t);
  closer.relate(a, b);
  return closer.result();
}

Partition congruence_generated_by(const CayleyTable& t, std::span<const std::pair<int, int>> pairs) {
  CongruenceCloser closer(t);
  for (auto [a, b] : pairs) closer.relate(a, b);
  return closer.result();
}

Partition join_congruences(const CayleyTable& t, const Partition& p, const Partition& q) {
  CongruenceCloser closer(t);
  for (int x = 0; x < t.order(); ++x) {
    closer.relate(x, p.rep(x));
    closer.relate(x, q.rep(x));
  }
  return closer.result();
}

std::vector<Partition> all_congruences(const CayleyTable& t, int order_cap) {
  int n = t.order();
  if (n > order_cap)
    throw SizeLimitExceeded("all_congruences: order " + std::to_string(n) + " exceeds cap " +
                            std::to_string(order_cap));

  std::vector<Partition> found;
  std::unordered_set<Partition, PartitionHash> seen;
  auto add = [&](Partition p) {
    if (seen.insert(p).second) found.push_back(std::move(p));
  };

  add(Partition::identity(n));
  for (int a = 0; a < n; ++a)
    for (int b = a + 1; b < n; ++b) add(principal_congruence(t, a, b));

  // Close under pairwise join; each new partition is joined against
  // everything already found.
  for (std::size_t i = 0; i < found.size(); ++i)
    for (std::size_t j = 0; j < i; ++j) add(join_congruences(t, found[i], found[j]));

  std::sort(found.begin(), found.end());
  return found;
}

std::optional<CongruenceViolation> find_congruence_violation(const CayleyTable& t, const Partition& p) {
  int n = t.order();
  if (p.order() != n) throw OrderMismatch("find_congruence_violation: partition order differs from table order");
  for (int x = 0; x < n; ++x) {
    int y = p.rep(x);
    if (y == x) continue;
    for (int s = 0; s < n; ++s) {
      if (!p.same(t.at(s, x), t.at(s, y))) return CongruenceViolation{x, y, s, true};
      if (!p.same(t.at(x, s), t.at(y, s))) return CongruenceViolation{x, y, s, false};
    }
  }
  return std::nullopt;
}

bool is_congruence(const CayleyTable& t, const Partition& p) { return !find_congruence_violation(t, p).has_value(); }

DeltaCheck is_delta(const CayleyTable& t) {
  int n = t.order();
  std::vector<Partition> principals;
  std::unordered_set<Partition, PartitionHash> seen;
  for (int a = 0; a < n; ++a)
    for (int b = a + 1; b < n; ++b) {
      Partition p = principal_congruence(t, a, b);
      if (seen.insert(p).second) principals.push_back(std::move(p));
    }
  for (std::size_t i = 0; i < principals.size(); ++i)
    for (std::size_t j = i + 1; j < principals.size(); ++j)
      if (compare_partitions(principals[i], principals[j]) == PartitionOrder::incomparable)
        return DeltaCheck{false, std::make_pair(principals[i], principals[j])};
  return DeltaCheck{true, std::nullopt};
}

Partition left_kernel_congruence(const CayleyTable& t) {
  int n = t.order();
  std::vector<int> map(static_cast<std::size_t>(n));
  for (int a = 0; a < n; ++a) {
    map[static_cast<std::size_t>(a)] = a;
    for (int b = 0; b < a; ++b) {
      bool equal = true;
      for (int s = 0; s < n && equal; ++s) equal = t.at(s, a) == t.at(s, b);
      if (equal) {
        map[static_cast<std::size_t>(a)] = map[static_cast<std::size_t>(b)];
        break;
      }
    }
  }
  Partition p = Partition::from_class_map(std::move(map));
  if (auto v = find_congruence_violation(t, p))
    throw NotACongruence(v->x, v->y, v->s, v->left);  // unreachable for a left kernel
  return p;
}

CongruenceQuotient quotient_by_congruence(const CayleyTable& t, const Partition& p) {
  if (auto v = find_congruence_violation(t, p)) throw NotACongruence(v->x, v->y, v->s, v->left);
  int n = t.order();
  std::vector<int> index_of(static_cast<std::size_t>(n), -1);
  int m = 0;
  for (int x = 0; x < n; ++x)
    if (p.rep(x) == x) index_of[static_cast<std::size_t>(x)] = m++;
  std::vector<int> map(static_cast<std::size_t>(n));
  for (int x = 0; x < n; ++x) map[static_cast<std::size_t>(x)] = index_of[static_cast<std::size_t>(p.rep(x))];
  std::vector<int> e(static_cast<std::size_t>(m) * m);
  for (int x = 0; x < n; ++x) {
    if (p.rep(x) != x) continue;
    for (int y = 0; y < n; ++y) {
      if (p.rep(y) != y) continue;
      e[static_cast<std::size_t>(map[static_cast<std::size_t>(x)]) * m + map[static_cast<std::size_t>(y)]] =
          map[static_cast<std::size_t>(t.at(x, y))];
    }
  }
  return CongruenceQuotient{CayleyTable::trusted(m, std::move(e)), std::move(map)};
}

}  // namespace semidelta
