#include "semidelta/partition.hpp"

#include <numeric>

#include "semidelta/errors.hpp"

namespace semidelta {

Partition Partition::identity(int n) {
  std::vector<int> rep(static_cast<std::size_t>(n));
  std::iota(rep.begin(), rep.end(), 0);
  return Partition(std::move(rep));
}

Partition Partition::universal(int n) {
  return Partition(std::vector<int>(static_cast<std::size_t>(n), 0));
}

Partition Partition::from_class_map(std::vector<int> class_of) {
  int n = static_cast<int>(class_of.size());
  // Compress to fixpoints, then normalize each class to its minimum.
  auto root = [&](int x) {
    while (class_of[static_cast<std::size_t>(x)] != x) x = class_of[static_cast<std::size_t>(x)];
    return x;
  };
  std::vector<int> min_of(static_cast<std::size_t>(n), -1);
  for (int x = 0; x < n; ++x) {
    int r = root(x);
    if (min_of[static_cast<std::size_t>(r)] < 0) min_of[static_cast<std::size_t>(r)] = x;
  }
  std::vector<int> rep(static_cast<std::size_t>(n));
  for (int x = 0; x < n; ++x) rep[static_cast<std::size_t>(x)] = min_of[static_cast<std::size_t>(root(x))];
  return Partition(std::move(rep));
}

int Partition::class_count() const {
  int c = 0;
  for (int x = 0; x < order(); ++x)
    if (rep_[static_cast<std::size_t>(x)] == x) ++c;
  return c;
}

std::vector<std::vector<int>> Partition::classes() const {
  std::vector<std::vector<int>> out;
  std::vector<int> slot(rep_.size(), -1);
  for (int x = 0; x < order(); ++x) {
    int r = rep_[static_cast<std::size_t>(x)];
    if (slot[static_cast<std::size_t>(r)] < 0) {
      slot[static_cast<std::size_t>(r)] = static_cast<int>(out.size());
      out.emplace_back();
    }
    out[static_cast<std::size_t>(slot[static_cast<std::size_t>(r)])].push_back(x);
  }
  return out;
}

std::string Partition::to_string() const {
  std::string s = "[";
  bool first_class = true;
  for (const auto& cls : classes()) {
    if (!first_class) s += ",";
    first_class = false;
    s += "[";
    for (std::size_t i = 0; i < cls.size(); ++i) {
      if (i) s += ",";
      s += std::to_string(cls[i]);
    }
    s += "]";
  }
  s += "]";
  return s;
}

std::size_t Partition::hash() const {
  // FNV-1a over the representative vector.
  std::uint64_t h = 14695981039346656037ull;
  for (int r : rep_) {
    h ^= static_cast<std::uint64_t>(r);
    h *= 1099511628211ull;
  }
  return static_cast<std::size_t>(h);
}

PartitionOrder compare_partitions(const Partition& p, const Partition& q) {
  if (p.order() != q.order()) throw OrderMismatch("compare_partitions: partitions of different orders");
  bool p_le_q = true, q_le_p = true;
  for (int x = 0; x < p.order(); ++x) {
    if (!q.same(x, p.rep(x))) p_le_q = false;
    if (!p.same(x, q.rep(x))) q_le_p = false;
  }
  if (p_le_q && q_le_p) return PartitionOrder::equal;
  if (p_le_q) return PartitionOrder::finer;
  if (q_le_p) return PartitionOrder::coarser;
  return PartitionOrder::incomparable;
}

}  // namespace semidelta
