#include "semidelta/t2r_search.hpp"

#include <cstdio>
#include <fstream>
#include <sstream>

#include "json.hpp"
#include "semidelta/errors.hpp"
#include "semidelta/structure.hpp"
#include "table_fill.hpp"

namespace semidelta {

std::string SearchCheckpoint::to_json() const {
  nlohmann::json j;
  j["format"] = "semidelta-t2r-checkpoint";
  j["version"] = version;
  j["max_order"] = max_order;
  j["current_order"] = current_order;
  j["prune_p6"] = prune_p6;
  j["prune_p7"] = prune_p7;
  j["depth"] = depth;
  j["cursor"] = cursor;
  j["counters"] = {{"nodes", counters.nodes},
                   {"assoc_rejected", counters.assoc_rejected},
                   {"nil_rejected", counters.nil_rejected},
                   {"p6_pruned", counters.p6_pruned},
                   {"p7_pruned", counters.p7_pruned},
                   {"leaves", counters.leaves},
                   {"leaf_rejected", counters.leaf_rejected}};
  return j.dump(2);
}

SearchCheckpoint SearchCheckpoint::from_json(const std::string& text) {
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(text);
  } catch (const nlohmann::json::exception& e) {
    throw ParseError(std::string("checkpoint: ") + e.what());
  }
  if (j.value("format", "") != std::string("semidelta-t2r-checkpoint"))
    throw CheckpointVersionMismatch("checkpoint: unrecognized format field");
  SearchCheckpoint cp;
  cp.version = j.value("version", -1);
  if (cp.version != current_version)
    throw CheckpointVersionMismatch("checkpoint: version " + std::to_string(cp.version) +
                                    " but this build reads version " + std::to_string(current_version));
  cp.max_order = j.at("max_order").get<int>();
  cp.current_order = j.at("current_order").get<int>();
  cp.prune_p6 = j.at("prune_p6").get<bool>();
  cp.prune_p7 = j.at("prune_p7").get<bool>();
  cp.depth = j.at("depth").get<int>();
  cp.cursor = j.at("cursor").get<std::vector<int>>();
  const auto& c = j.at("counters");
  cp.counters.nodes = c.at("nodes").get<std::uint64_t>();
  cp.counters.assoc_rejected = c.at("assoc_rejected").get<std::uint64_t>();
  cp.counters.nil_rejected = c.at("nil_rejected").get<std::uint64_t>();
  cp.counters.p6_pruned = c.at("p6_pruned").get<std::uint64_t>();
  cp.counters.p7_pruned = c.at("p7_pruned").get<std::uint64_t>();
  cp.counters.leaves = c.at("leaves").get<std::uint64_t>();
  cp.counters.leaf_rejected = c.at("leaf_rejected").get<std::uint64_t>();
  return cp;
}

void SearchCheckpoint::save(const std::string& path) const {
  std::string tmp = path + ".tmp";
  {
    std::ofstream out(tmp, std::ios::trunc);
    if (!out) throw Error("cannot write checkpoint file " + tmp);
    out << to_json() << '\n';
  }
  if (std::rename(tmp.c_str(), path.c_str()) != 0) throw Error("cannot move checkpoint into place at " + path);
}

SearchCheckpoint SearchCheckpoint::load(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error("cannot read checkpoint file " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return from_json(buf.str());
}

namespace {

// Backtracking state for one table order: the fixed shape plus the list
// of free cells in decision order (nil block row-major, then the u/v
// rows over S0, then the u/v columns).
struct ShapeSearch {
  int n, k, u, v;
  std::vector<int> cells;  // flat cell indices in decision order
  int block_end;           // depth at which the S0 block is complete
  int rows_end;            // depth at which the u/v rows over S0 are complete
  std::vector<int> tab;

  explicit ShapeSearch(int order) : n(order), k(order - 2), u(order - 2), v(order - 1) {
    tab.assign(static_cast<std::size_t>(n) * n, -1);
    auto set = [&](int a, int b, int val) { tab[static_cast<std::size_t>(a) * n + b] = val; };
    for (int b = 0; b < k; ++b) set(0, b, 0);
    for (int a = 0; a < k; ++a) set(a, 0, 0);
    set(u, u, u);
    set(u, v, v);
    set(v, u, u);
    set(v, v, v);
    for (int a = 1; a < k; ++a)
      for (int b = 1; b < k; ++b) cells.push_back(a * n + b);
    block_end = static_cast<int>(cells.size());
    for (int b = 0; b < k; ++b) cells.push_back(u * n + b);
    for (int b = 0; b < k; ++b) cells.push_back(v * n + b);
    rows_end = static_cast<int>(cells.size());
    for (int a = 0; a < k; ++a) {
      cells.push_back(a * n + u);
      cells.push_back(a * n + v);
    }
  }

  int depth_count() const { return static_cast<int>(cells.size()); }

  bool block_is_nil() const {
    // In a nil block of size k the zero shows up within the first k
    // powers of every element, so a^k = 0 is the whole test.
    for (int a = 1; a < k; ++a) {
      int cur = a;
      for (int step = 1; step < k; ++step) cur = tab[static_cast<std::size_t>(cur) * n + a];
      if (cur != 0) return false;
    }
    return true;
  }

  bool block_square_full() const {
    std::uint64_t sq = 0;
    for (int a = 0; a < k; ++a)
      for (int b = 0; b < k; ++b) sq |= std::uint64_t{1} << tab[static_cast<std::size_t>(a) * n + b];
    return sq == (std::uint64_t{1} << k) - 1;
  }

  bool p6_violated() const {
    for (int b = 0; b < k; ++b)
      if (tab[static_cast<std::size_t>(u) * n + b] != b && tab[static_cast<std::size_t>(v) * n + b] != b)
        return false;
    return true;  // every S0 element is fixed by u or v
  }
};

}  // namespace

T2rSearchOutcome search_t2r(const T2rSearchOptions& opts, const SearchCheckpoint* resume) {
  if (opts.max_order > opts.order_cap && !opts.allow_above_cap)
    throw SizeLimitExceeded("search_t2r: max_order " + std::to_string(opts.max_order) + " exceeds cap " +
                            std::to_string(opts.order_cap));
  if (resume) {
    if (resume->max_order != opts.max_order || resume->prune_p6 != opts.prune_p6 ||
        resume->prune_p7 != opts.prune_p7)
      throw CheckpointVersionMismatch("checkpoint was taken with different search parameters");
  }

  T2rSearchOutcome out;
  if (resume) out.counters = resume->counters;

  int start_order = resume ? resume->current_order : 4;
  for (int order = start_order; order <= opts.max_order; ++order) {
    ShapeSearch shape(order);
    int depth_count = shape.depth_count();
    std::vector<int> val(static_cast<std::size_t>(depth_count), 0);
    int d = 0;

    if (resume && order == resume->current_order) {
      val = resume->cursor;
      if (static_cast<int>(val.size()) != depth_count)
        throw CheckpointVersionMismatch("checkpoint cursor does not fit the search shape");
      // Replay the assignments below the suspension depth; they were
      // all consistent when the checkpoint was written.
      for (int i = 0; i < resume->depth; ++i)
        shape.tab[static_cast<std::size_t>(shape.cells[static_cast<std::size_t>(i)])] = val[static_cast<std::size_t>(i)];
      d = resume->depth;
    }

    while (d >= 0) {
      if (d == depth_count) {
        // Leaf: a fully assembled shape-constrained table.
        ++out.counters.leaves;
        CayleyTable t = CayleyTable::trusted(shape.n, shape.tab);
        if (auto w = recognize_t2(t, TKind::T2R)) {
          out.witness = t;
          out.completed = true;
          return out;
        }
        ++out.counters.leaf_rejected;
        --d;
        shape.tab[static_cast<std::size_t>(shape.cells[static_cast<std::size_t>(d)])] = -1;
        ++val[static_cast<std::size_t>(d)];
        continue;
      }
      if (val[static_cast<std::size_t>(d)] >= shape.k) {
        // Exhausted this depth.
        val[static_cast<std::size_t>(d)] = 0;
        --d;
        if (d >= 0) {
          shape.tab[static_cast<std::size_t>(shape.cells[static_cast<std::size_t>(d)])] = -1;
          ++val[static_cast<std::size_t>(d)];
        }
        continue;
      }

      // Suspension points sit just before a placement, so a resumed run
      // replays nothing and skips nothing.
      auto snapshot = [&]() {
        SearchCheckpoint cp;
        cp.max_order = opts.max_order;
        cp.current_order = order;
        cp.prune_p6 = opts.prune_p6;
        cp.prune_p7 = opts.prune_p7;
        cp.depth = d;
        cp.cursor = val;
        cp.counters = out.counters;
        return cp;
      };
      if (opts.node_budget && out.counters.nodes >= *opts.node_budget) {
        SearchCheckpoint cp = snapshot();
        if (opts.checkpoint_path) cp.save(*opts.checkpoint_path);
        out.suspended = std::move(cp);
        out.completed = false;
        return out;
      }
      if (opts.checkpoint_path && out.counters.nodes > 0 && out.counters.nodes % opts.checkpoint_every == 0)
        snapshot().save(*opts.checkpoint_path);

      ++out.counters.nodes;

      int cell = shape.cells[static_cast<std::size_t>(d)];
      shape.tab[static_cast<std::size_t>(cell)] = val[static_cast<std::size_t>(d)];
      bool ok = internal::assignment_consistent(shape.tab, shape.n, cell / shape.n, cell % shape.n);
      if (!ok) ++out.counters.assoc_rejected;

      if (ok && d + 1 == shape.block_end) {
        if (!shape.block_is_nil()) {
          ok = false;
          ++out.counters.nil_rejected;
        } else if (opts.prune_p7 && !shape.block_square_full()) {
          ok = false;
          ++out.counters.p7_pruned;
        }
      }
      if (ok && d + 1 == shape.rows_end && opts.prune_p6 && shape.p6_violated()) {
        ok = false;
        ++out.counters.p6_pruned;
      }

      if (ok) {
        ++d;
        if (d < depth_count) val[static_cast<std::size_t>(d)] = 0;
      } else {
        shape.tab[static_cast<std::size_t>(cell)] = -1;
        ++val[static_cast<std::size_t>(d)];
      }
    }
  }

  out.completed = true;
  if (opts.checkpoint_path) {
    SearchCheckpoint cp;
    cp.max_order = opts.max_order;
    cp.current_order = opts.max_order + 1;
    cp.prune_p6 = opts.prune_p6;
    cp.prune_p7 = opts.prune_p7;
    cp.counters = out.counters;
    cp.save(*opts.checkpoint_path);
  }
  return out;
}

}  // namespace semidelta
