#include "semidelta/enumerate.hpp"

#include <algorithm>
#include <atomic>
#include <cassert>
#include <condition_variable>
#include <mutex>
#include <thread>

#include "semidelta/errors.hpp"
#include "table_fill.hpp"

namespace semidelta {

CayleyTable relabel(const CayleyTable& t, std::span<const int> perm) {
  int n = t.order();
  assert(static_cast<int>(perm.size()) == n);
  std::vector<int> e(static_cast<std::size_t>(n) * n);
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b)
      e[static_cast<std::size_t>(perm[static_cast<std::size_t>(a)]) * n + perm[static_cast<std::size_t>(b)]] =
          perm[static_cast<std::size_t>(t.at(a, b))];
  return CayleyTable::trusted(n, std::move(e));
}

namespace {

// Branch-and-bound search over relabelings. inv[k] is the original
// element that receives label k. After a prefix of labels is placed,
// the candidate's row-major cells are compared against the incumbent:
// a cell whose product is still unlabeled is only known to get a label
// >= the prefix length, which is often already enough to cut the branch.
class RelabelSearch {
 public:
  RelabelSearch(const CayleyTable& t, const std::vector<int>& incumbent)
      : t_(t), n_(t.order()), best_(incumbent) {}

  enum class Cmp { better, equal, prune, open };

  // Walks row-major cells; `depth` labels are placed.
  Cmp compare_prefix(int depth) const {
    for (int x = 0; x < n_; ++x)
      for (int y = 0; y < n_; ++y) {
        if (x >= depth || y >= depth) return Cmp::open;
        int raw = t_.at(inv_[static_cast<std::size_t>(x)], inv_[static_cast<std::size_t>(y)]);
        int lab = label_[static_cast<std::size_t>(raw)];
        int inc = best_[static_cast<std::size_t>(x) * n_ + y];
        if (lab < 0) {
          // Unlabeled product: its eventual label is at least `depth`.
          if (depth > inc) return Cmp::prune;
          return Cmp::open;
        }
        if (lab < inc) return Cmp::better;
        if (lab > inc) return Cmp::prune;
      }
    return Cmp::equal;
  }

  // Visits every complete relabeling not cut off by the bound;
  // on_leaf(cmp) gets Cmp::better or Cmp::equal. Returns false if
  // on_leaf requested a stop.
  bool run(const std::function<bool(Cmp)>& on_leaf) {
    label_.assign(static_cast<std::size_t>(n_), -1);
    inv_.assign(static_cast<std::size_t>(n_), -1);
    return descend(0, on_leaf);
  }

  const std::vector<int>& labels() const { return label_; }

 private:
  bool descend(int depth, const std::function<bool(Cmp)>& on_leaf) {
    if (depth == n_) {
      Cmp c = compare_prefix(depth);
      assert(c == Cmp::better || c == Cmp::equal);
      return on_leaf(c);
    }
    for (int e = 0; e < n_; ++e) {
      if (label_[static_cast<std::size_t>(e)] >= 0) continue;
      label_[static_cast<std::size_t>(e)] = depth;
      inv_[static_cast<std::size_t>(depth)] = e;
      if (compare_prefix(depth + 1) != Cmp::prune) {
        if (!descend(depth + 1, on_leaf)) return false;
      }
      label_[static_cast<std::size_t>(e)] = -1;
      inv_[static_cast<std::size_t>(depth)] = -1;
    }
    return true;
  }

  const CayleyTable& t_;
  int n_;
  std::vector<int> best_;

  std::vector<int> label_;  // original element -> label, -1 unset
  std::vector<int> inv_;    // label -> original element
};

}  // namespace

CanonicalTable canonical_form(const CayleyTable& t) {
  int n = t.order();
  std::vector<int> best = t.entries();
  std::vector<int> best_perm(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) best_perm[static_cast<std::size_t>(i)] = i;
  std::uint64_t aut = 0;

  // Incumbent-improving passes: when a strictly smaller relabeling
  // appears the incumbent is replaced and the search restarted, so the
  // automorphism count always refers to the final minimum.
  for (;;) {
    bool improved = false;
    RelabelSearch search(t, best);
    aut = 0;
    search.run([&](RelabelSearch::Cmp c) {
      if (c == RelabelSearch::Cmp::better) {
        best_perm = search.labels();
        improved = true;
        return false;
      }
      ++aut;
      return true;
    });
    if (!improved) break;
    best = relabel(t, best_perm).entries();
  }
  return CanonicalTable{CayleyTable::trusted(n, best), std::move(best_perm), aut};
}

bool is_canonical(const CayleyTable& t) {
  RelabelSearch search(t, t.entries());
  bool minimal = true;
  search.run([&](RelabelSearch::Cmp c) {
    if (c == RelabelSearch::Cmp::better) {
      minimal = false;
      return false;
    }
    return true;
  });
  return minimal;
}

IsoCheck are_isomorphic(const CayleyTable& a, const CayleyTable& b) {
  if (a.order() != b.order()) return IsoCheck{false, {}};
  CanonicalTable ca = canonical_form(a), cb = canonical_form(b);
  if (!(ca.table == cb.table)) return IsoCheck{false, {}};
  int n = a.order();
  std::vector<int> inv_b(static_cast<std::size_t>(n));
  for (int x = 0; x < n; ++x) inv_b[static_cast<std::size_t>(cb.relabeling[static_cast<std::size_t>(x)])] = x;
  std::vector<int> phi(static_cast<std::size_t>(n));
  for (int x = 0; x < n; ++x)
    phi[static_cast<std::size_t>(x)] = inv_b[static_cast<std::size_t>(ca.relabeling[static_cast<std::size_t>(x)])];
#ifndef NDEBUG
  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y)
      assert(b.at(phi[static_cast<std::size_t>(x)], phi[static_cast<std::size_t>(y)]) ==
             phi[static_cast<std::size_t>(a.at(x, y))]);
#endif
  return IsoCheck{true, std::move(phi)};
}

namespace internal {

bool assignment_consistent(const std::vector<int>& tab, int n, int r, int c) {
  auto at = [&](int x, int y) { return tab[static_cast<std::size_t>(x) * n + y]; };
  int v = at(r, c);
  // Triples whose four products just became fully determined.
  for (int z = 0; z < n; ++z) {
    int q = at(c, z);  // (r, c, z)
    if (q >= 0 && at(v, z) >= 0 && at(r, q) >= 0 && at(v, z) != at(r, q)) return false;
    int w = at(z, r);  // (z, r, c)
    if (w >= 0 && at(w, c) >= 0 && at(z, v) >= 0 && at(w, c) != at(z, v)) return false;
  }
  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y) {
      if (at(x, y) == r) {  // (x, y, c) with x*y = r
        int q = at(y, c);
        if (q >= 0 && at(x, q) >= 0 && v != at(x, q)) return false;
      }
      if (at(x, y) == c) {  // (r, x, y) with x*y = c
        int w = at(r, x);
        if (w >= 0 && at(w, y) >= 0 && v != at(w, y)) return false;
      }
    }
  return true;
}

}  // namespace internal

namespace {

// Depth-first fill of cells `from`..n^2-1 in row-major order.
// Returns false if the visitor stopped the walk.
bool fill_cells(std::vector<int>& tab, int n, int from, bool up_to_iso,
                const std::function<bool(const CayleyTable&)>& emit, const std::atomic<bool>* stop) {
  if (from == n * n) {
    CayleyTable t = CayleyTable::trusted(n, tab);
    if (up_to_iso && !is_canonical(t)) return true;
    return emit(t);
  }
  if (stop && stop->load(std::memory_order_relaxed)) return false;
  int r = from / n, c = from % n;
  for (int v = 0; v < n; ++v) {
    // Canonical tables start with 0*0 = 0: some idempotent exists and
    // relabeling one to index 0 beats any other top-left value.
    if (up_to_iso && from == 0 && v != 0) break;
    tab[static_cast<std::size_t>(from)] = v;
    if (internal::assignment_consistent(tab, n, r, c)) {
      if (!fill_cells(tab, n, from + 1, up_to_iso, emit, stop)) {
        tab[static_cast<std::size_t>(from)] = -1;
        return false;
      }
    }
    tab[static_cast<std::size_t>(from)] = -1;
  }
  return true;
}

// First-row prefixes that pass the local checks; these partition the
// search tree for the parallel walk.
std::vector<std::vector<int>> first_row_tasks(int n, bool up_to_iso) {
  std::vector<std::vector<int>> tasks;
  std::vector<int> tab(static_cast<std::size_t>(n) * n, -1);
  std::function<void(int)> rec = [&](int from) {
    if (from == n) {
      tasks.emplace_back(tab.begin(), tab.begin() + n);
      return;
    }
    for (int v = 0; v < n; ++v) {
      if (up_to_iso && from == 0 && v != 0) break;
      tab[static_cast<std::size_t>(from)] = v;
      if (internal::assignment_consistent(tab, n, 0, from)) rec(from + 1);
      tab[static_cast<std::size_t>(from)] = -1;
    }
  };
  rec(0);
  return tasks;
}

void enumerate_parallel(int n, const EnumerationOptions& opts,
                        const std::function<bool(const CayleyTable&)>& emit) {
  std::vector<std::vector<int>> tasks = first_row_tasks(n, opts.up_to_iso);
  std::size_t task_count = tasks.size();
  std::vector<std::vector<CayleyTable>> results(task_count);
  std::vector<char> done(task_count, 0);
  std::atomic<std::size_t> next{0};
  std::atomic<bool> stop{false};
  std::mutex mu;
  std::condition_variable cv;

  auto worker = [&]() {
    for (;;) {
      std::size_t i = next.fetch_add(1);
      if (i >= task_count || stop.load()) return;
      std::vector<int> tab(static_cast<std::size_t>(n) * n, -1);
      std::copy(tasks[i].begin(), tasks[i].end(), tab.begin());
      std::vector<CayleyTable> local;
      fill_cells(tab, n, n, opts.up_to_iso,
                 [&](const CayleyTable& t) {
                   local.push_back(t);
                   return true;
                 },
                 &stop);
      {
        std::lock_guard<std::mutex> lock(mu);
        results[i] = std::move(local);
        done[i] = 1;
      }
      cv.notify_all();
    }
  };

  int thread_count = std::max(1, opts.threads);
  std::vector<std::thread> pool;
  pool.reserve(static_cast<std::size_t>(thread_count));
  for (int i = 0; i < thread_count; ++i) pool.emplace_back(worker);

  // Emit finished partitions in task order; the visitor may stop early.
  bool stopped = false;
  for (std::size_t i = 0; i < task_count && !stopped; ++i) {
    std::unique_lock<std::mutex> lock(mu);
    cv.wait(lock, [&] { return done[i] != 0; });
    for (const CayleyTable& t : results[i]) {
      if (!emit(t)) {
        stopped = true;
        stop.store(true);
        break;
      }
    }
    results[i].clear();
  }
  if (stopped) stop.store(true);
  for (auto& th : pool) th.join();
}

}  // namespace

void enumerate_semigroups(int order, const EnumerationOptions& opts,
                          const std::function<bool(const CayleyTable&)>& emit) {
  if (order < 1) throw SizeLimitExceeded("enumerate_semigroups: order must be positive");
  if (order > opts.order_cap && !opts.allow_above_cap)
    throw SizeLimitExceeded("enumerate_semigroups: order " + std::to_string(order) + " exceeds cap " +
                            std::to_string(opts.order_cap));

  if (opts.threads > 1 && order > 2) {
    enumerate_parallel(order, opts, emit);
    return;
  }
  std::vector<int> tab(static_cast<std::size_t>(order) * order, -1);
  fill_cells(tab, order, 0, opts.up_to_iso, emit, nullptr);
}

std::vector<CayleyTable> all_semigroups(int order, bool up_to_iso, int threads) {
  EnumerationOptions opts;
  opts.up_to_iso = up_to_iso;
  opts.threads = threads;
  opts.order_cap = std::max(opts.order_cap, order);
  std::vector<CayleyTable> out;
  enumerate_semigroups(order, opts, [&](const CayleyTable& t) {
    out.push_back(t);
    return true;
  });
  return out;
}

std::uint64_t count_semigroups(int order, const EnumerationOptions& opts) {
  std::uint64_t count = 0;
  enumerate_semigroups(order, opts, [&](const CayleyTable&) {
    ++count;
    return true;
  });
  return count;
}

}  // namespace semidelta
