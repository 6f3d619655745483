// Command-line front end: property checks, classification, the
// T2R-condition report, the shape-constrained witness search, and
// enumeration, over tables in the text or JSON format.
//
// Exit codes: 0 success / property holds; 1 well-formed input whose
// checked property is false (or a search that found a witness);
// 2 input or usage error; 3 classification falsified (a weakly
// exponential chain-congruence table matching no template).

#include <chrono>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"

#include "semidelta/congruence.hpp"
#include "semidelta/enumerate.hpp"
#include "semidelta/errors.hpp"
#include "semidelta/green.hpp"
#include "semidelta/properties.hpp"
#include "semidelta/structure.hpp"
#include "semidelta/t2r_search.hpp"
#include "semidelta/table_io.hpp"
#include "semidelta/version.hpp"

using nlohmann::json;
using namespace semidelta;

namespace {

struct LoadedTable {
  ParsedTable parsed;
  std::string path;
  std::string digest;
};

LoadedTable load_table(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  std::string text = buf.str();
  ParsedTable parsed = [&] {
    for (char c : text)
      if (!std::isspace(static_cast<unsigned char>(c))) return c == '{' ? parse_table_json(text) : parse_table_text(text);
    throw ParseError(path + " is empty");
  }();
  return LoadedTable{std::move(parsed), path, content_digest(text)};
}

json partition_json(const Partition& p) {
  json classes = json::array();
  for (const auto& cls : p.classes()) classes.push_back(cls);
  return classes;
}

json report_shell(const std::string& command, const LoadedTable* input) {
  json j;
  j["command"] = command;
  j["version"] = version_string;
  if (input) {
    j["input"] = input->path;
    j["input_digest"] = input->digest;
    j["order"] = input->parsed.table.order();
    if (!input->parsed.names.empty()) j["names"] = input->parsed.names;
  }
  return j;
}

struct Timer {
  std::chrono::steady_clock::time_point start = std::chrono::steady_clock::now();
  double ms() const {
    return std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
  }
};

// ---- property evaluators shared by `check` and `enumerate --filter` ----

struct PropResult {
  bool holds;
  json detail;  // witness and parameters, already serialized
};

PropResult eval_property(const CayleyTable& t, const std::string& name, int max_degree) {
  json d;
  if (name == "delta") {
    DeltaCheck r = is_delta(t);
    if (r.witness) {
      d["witness"]["congruence_a"] = partition_json(r.witness->first);
      d["witness"]["congruence_b"] = partition_json(r.witness->second);
    }
    return {r.is_delta, d};
  }
  if (name == "we") {
    WeCheck r = is_weakly_exponential(t);
    if (r.witness) d["witness"] = {{"a", r.witness->a}, {"b", r.witness->b}, {"n", r.witness->n}};
    return {r.holds, d};
  }
  if (name == "nil") return {is_nil(t), d};
  if (name == "rcomm") {
    RCommCheck r = is_r_commutative(t);
    if (r.witness) d["witness"] = {{"s", r.witness->first}, {"t", r.witness->second}};
    return {r.holds, d};
  }
  if (name == "medial" || name == "leftcomm" || name == "rightcomm") {
    IdentitySpec spec = name == "medial"     ? IdentitySpec::medial()
                        : name == "leftcomm" ? IdentitySpec::left_commutative()
                                             : IdentitySpec::right_commutative();
    IdentityCheck r = satisfies_identity(t, spec);
    if (r.witness) d["witness"]["assignment"] = *r.witness;
    return {r.holds, d};
  }
  if (name == "permutative") {
    PermutativeCheck r = is_permutative(t, max_degree);
    d["max_degree"] = r.max_degree_searched;
    d["bounded"] = true;  // degrees above the cap are not searched
    if (r.holds) {
      d["witness"]["degree"] = r.degree;
      d["witness"]["permutation"] = r.permutation;
    }
    return {r.holds, d};
  }
  if (name == "ideal-chain") {
    ChainCheck r = ideals_form_chain(t);
    if (r.witness) {
      d["witness"]["generator_a"] = r.witness->first;
      d["witness"]["generator_b"] = r.witness->second;
      d["witness"]["ideal_a"] = principal_ideal(t, r.witness->first).to_vector();
      d["witness"]["ideal_b"] = principal_ideal(t, r.witness->second).to_vector();
    }
    return {r.chain, d};
  }
  throw ParseError("unknown property '" + name + "'");
}

const std::vector<std::string> kAllProps = {"delta",  "we",          "nil",        "rcomm",
                                            "medial", "leftcomm",    "rightcomm",  "permutative",
                                            "ideal-chain"};

std::vector<std::string> split_list(const std::string& csv) {
  std::vector<std::string> out;
  std::string item;
  std::istringstream in(csv);
  while (std::getline(in, item, ','))
    if (!item.empty()) out.push_back(item);
  return out;
}

void print_prop_text(const std::string& name, const PropResult& r) {
  std::cout << name << ": " << (r.holds ? "true" : "false");
  if (r.detail.contains("witness")) std::cout << "  witness: " << r.detail["witness"].dump();
  if (name == "permutative" && r.detail.contains("max_degree"))
    std::cout << "  (searched degrees 2.." << r.detail["max_degree"].get<int>() << ")";
  std::cout << '\n';
}

// ---- check ----

json j_structure_json(const CayleyTable& t) {
  JStructure js = j_structure(t);
  json classes = json::array();
  for (std::size_t id = 0; id < js.j_classes.size(); ++id)
    classes.push_back({{"members", js.j_classes[id].to_vector()},
                       {"principal_ideal", js.class_ideal[id].to_vector()}});
  return json{{"classes", classes}, {"chain_ordered", js.chain_ordered}};
}

int run_check(const std::string& file, const std::string& props_csv, int max_degree, bool with_j_structure,
              bool as_json) {
  Timer timer;
  LoadedTable input = load_table(file);
  std::vector<std::string> props = props_csv.empty() ? kAllProps : split_list(props_csv);

  json report = report_shell("check", &input);
  bool all_hold = true;
  json results = json::object();
  std::vector<std::pair<std::string, PropResult>> rows;
  for (const std::string& name : props) {
    PropResult r = eval_property(input.parsed.table, name, max_degree);
    all_hold = all_hold && r.holds;
    json entry = r.detail;
    entry["holds"] = r.holds;
    results[name] = entry;
    rows.emplace_back(name, std::move(r));
  }
  report["results"] = results;
  report["all_hold"] = all_hold;
  if (with_j_structure) report["j_structure"] = j_structure_json(input.parsed.table);
  report["elapsed_ms"] = timer.ms();

  if (as_json) {
    std::cout << report.dump(2) << '\n';
  } else {
    std::cout << "check " << file << "  (order " << input.parsed.table.order() << ", digest " << input.digest
              << ")\n";
    for (const auto& [name, r] : rows) print_prop_text(name, r);
    if (with_j_structure) std::cout << "j-structure: " << report["j_structure"].dump() << '\n';
  }
  return all_hold ? 0 : 1;
}

// ---- classify ----

json classification_json(const ClassificationResult& r) {
  json j;
  j["template"] = to_string(r.tmpl);
  if (r.p) j["p"] = *r.p;
  if (r.k) j["k"] = *r.k;
  if (r.right_oriented) j["orientation"] = *r.right_oriented ? "right" : "left";
  if (r.decomposition) {
    j["decomposition"]["s0"] = r.decomposition->s0.to_vector();
    j["decomposition"]["s1"] = r.decomposition->s1().to_vector();
    j["decomposition"]["kind"] = to_string(r.decomposition->kind);
  }
  if (r.tmpl == Template::NotWeDelta) {
    j["weakly_exponential"] = r.we_check->holds;
    if (r.we_check->witness)
      j["we_witness"] = {{"a", r.we_check->witness->a}, {"b", r.we_check->witness->b}, {"n", r.we_check->witness->n}};
    j["delta"] = r.delta_check->is_delta;
    if (r.delta_check->witness) {
      j["delta_witness"]["congruence_a"] = partition_json(r.delta_check->witness->first);
      j["delta_witness"]["congruence_b"] = partition_json(r.delta_check->witness->second);
    }
  }
  return j;
}

int run_classify(const std::string& file, bool as_json) {
  Timer timer;
  LoadedTable input = load_table(file);
  ClassificationResult r = classify_we_delta(input.parsed.table);  // ClassificationGap propagates

  json report = report_shell("classify", &input);
  report["classification"] = classification_json(r);
  report["elapsed_ms"] = timer.ms();

  if (as_json) {
    std::cout << report.dump(2) << '\n';
  } else {
    std::cout << "classify " << file << "  (order " << input.parsed.table.order() << ", digest " << input.digest
              << ")\n";
    std::cout << "template: " << to_string(r.tmpl);
    if (r.p) std::cout << "  p=" << *r.p;
    if (r.k) std::cout << "  k=" << *r.k;
    if (r.right_oriented) std::cout << "  orientation=" << (*r.right_oriented ? "right" : "left");
    std::cout << '\n';
    if (r.decomposition) {
      std::cout << "s0: " << json(r.decomposition->s0.to_vector()).dump()
                << "  s1: " << json(r.decomposition->s1().to_vector()).dump() << '\n';
    }
    if (r.tmpl == Template::NotWeDelta) {
      std::cout << "weakly exponential: " << (r.we_check->holds ? "true" : "false") << '\n';
      std::cout << "congruence chain: " << (r.delta_check->is_delta ? "true" : "false") << '\n';
    }
  }
  return r.tmpl == Template::NotWeDelta ? 1 : 0;
}

// ---- theorem1 ----

json condition_json(const ConditionOutcome& c) {
  json j;
  j["holds"] = c.holds;
  j["vacuous"] = c.vacuous;
  if (!c.witness.empty()) j["witness"] = c.witness;
  return j;
}

int run_theorem1(const std::string& file, bool uncorrected, bool as_json) {
  Timer timer;
  LoadedTable input = load_table(file);
  const CayleyTable& t = input.parsed.table;
  CayleyTable opposite = t.transpose();

  json report = report_shell("theorem1", &input);
  report["condition5_guard"] = uncorrected ? "uncorrected" : "corrected";
  json candidates = json::array();
  bool any_all5 = false;
  std::vector<std::string> text_lines;

  for (const auto& d : find_t2_decompositions(t)) {
    if (d.kind == TKind::T1) continue;  // the five conditions concern the band-pair splits
    // A left-zero split is judged through the opposite table.
    bool dual = d.kind == TKind::T2L;
    T2Decomposition shaped{d.s0, d.u, d.v, TKind::T2R, d.flags};
    T2rConditionReport rep = t2r_condition_report(dual ? opposite : t, shaped, !uncorrected);
    any_all5 = any_all5 || rep.all_hold();

    json cj;
    cj["kind"] = to_string(d.kind);
    cj["s0"] = d.s0.to_vector();
    cj["s1"] = d.s1().to_vector();
    if (dual) cj["evaluated_on"] = "opposite";
    json conds = json::object();
    for (int i = 0; i < 5; ++i) conds["condition" + std::to_string(i + 1)] = condition_json(rep.conditions[i]);
    cj["conditions"] = conds;
    cj["all_hold"] = rep.all_hold();
    candidates.push_back(cj);

    std::ostringstream line;
    line << "candidate " << to_string(d.kind) << "  s1=" << json(d.s1().to_vector()).dump()
         << "  s0=" << json(d.s0.to_vector()).dump() << (dual ? "  (evaluated on the opposite table)" : "")
         << '\n';
    for (int i = 0; i < 5; ++i) {
      const auto& c = rep.conditions[i];
      line << "  condition (" << i + 1 << "): " << (c.holds ? "true" : "false")
           << (c.vacuous ? " (vacuous)" : "");
      if (!c.witness.empty()) line << "  witness: " << json(c.witness).dump();
      line << '\n';
    }
    text_lines.push_back(line.str());
  }

  report["candidates"] = candidates;
  report["any_candidate_satisfies_all"] = any_all5;
  report["elapsed_ms"] = timer.ms();

  if (as_json) {
    std::cout << report.dump(2) << '\n';
  } else {
    std::cout << "theorem1 " << file << "  (order " << t.order() << ", digest " << input.digest << ", "
              << (uncorrected ? "uncorrected" : "corrected") << " condition-5 guard)\n";
    if (candidates.empty()) std::cout << "no T2R- or T2L-shaped decomposition\n";
    for (const auto& line : text_lines) std::cout << line;
    if (!candidates.empty())
      std::cout << (any_all5 ? "some candidate satisfies all five conditions\n"
                             : "no candidate satisfies all five conditions\n");
  }
  if (candidates.empty()) return 1;
  return any_all5 ? 0 : 1;
}

// ---- search-t2r ----

json counters_json(const SearchCounters& c) {
  return json{{"nodes", c.nodes},
              {"assoc_rejected", c.assoc_rejected},
              {"nil_rejected", c.nil_rejected},
              {"p6_pruned", c.p6_pruned},
              {"p7_pruned", c.p7_pruned},
              {"leaves", c.leaves},
              {"leaf_rejected", c.leaf_rejected}};
}

int run_search(int max_order, bool no_p6, bool no_p7, const std::string& checkpoint,
               std::uint64_t checkpoint_every, const std::string& resume, std::uint64_t node_budget,
               bool above_cap, bool as_json) {
  Timer timer;
  T2rSearchOptions opts;
  opts.max_order = max_order;
  opts.prune_p6 = !no_p6;
  opts.prune_p7 = !no_p7;
  opts.allow_above_cap = above_cap;
  if (!checkpoint.empty()) opts.checkpoint_path = checkpoint;
  if (checkpoint_every > 0) opts.checkpoint_every = checkpoint_every;
  if (node_budget > 0) opts.node_budget = node_budget;

  std::optional<SearchCheckpoint> cp;
  if (!resume.empty()) cp = SearchCheckpoint::load(resume);
  T2rSearchOutcome out = search_t2r(opts, cp ? &*cp : nullptr);

  json report = report_shell("search-t2r", nullptr);
  report["max_order"] = max_order;
  report["pruning"] = {{"p6", opts.prune_p6}, {"p7", opts.prune_p7}};
  report["completed"] = out.completed;
  report["witness_found"] = out.witness.has_value();
  report["counters"] = counters_json(out.counters);
  if (out.witness) report["witness"] = json::parse(table_to_json(*out.witness));
  if (out.suspended) report["suspended_at_order"] = out.suspended->current_order;
  report["elapsed_ms"] = timer.ms();

  if (as_json) {
    std::cout << report.dump(2) << '\n';
  } else {
    std::cout << "search-t2r up to order " << max_order << "  (prune-p6 " << (opts.prune_p6 ? "on" : "off")
              << ", prune-p7 " << (opts.prune_p7 ? "on" : "off") << ")\n";
    if (out.witness) {
      std::cout << "T2R WITNESS FOUND (this falsifies the known non-existence):\n"
                << table_to_text(*out.witness);
    } else if (out.completed) {
      std::cout << "no T2R semigroup found\n";
    } else {
      std::cout << "suspended after " << out.counters.nodes << " nodes (checkpoint written)\n";
    }
    const auto& c = out.counters;
    std::cout << "nodes: " << c.nodes << "  assoc-rejected: " << c.assoc_rejected
              << "  nil-rejected: " << c.nil_rejected << "  p6-pruned: " << c.p6_pruned
              << "  p7-pruned: " << c.p7_pruned << "  leaves: " << c.leaves
              << "  leaf-rejected: " << c.leaf_rejected << '\n';
  }
  return out.witness ? 1 : 0;
}

// ---- enumerate ----

int run_enumerate(int order, bool labeled, bool count_only, const std::string& filter_csv, int threads,
                  int max_degree, bool above_cap, bool as_json) {
  Timer timer;
  std::vector<std::string> filters = split_list(filter_csv);
  for (const auto& f : filters)
    if (std::find(kAllProps.begin(), kAllProps.end(), f) == kAllProps.end())
      throw ParseError("unknown filter '" + f + "'");
  bool attach_classification =
      std::find(filters.begin(), filters.end(), "we") != filters.end() &&
      std::find(filters.begin(), filters.end(), "delta") != filters.end();

  EnumerationOptions opts;
  opts.up_to_iso = !labeled;
  opts.threads = threads;
  opts.allow_above_cap = above_cap;

  std::uint64_t emitted = 0, visited = 0;
  enumerate_semigroups(order, opts, [&](const CayleyTable& t) {
    ++visited;
    json line;
    json checks = json::object();
    for (const auto& f : filters) {
      PropResult r = eval_property(t, f, max_degree);
      if (!r.holds) return true;  // filtered out
      checks[f] = true;
    }
    ++emitted;
    if (count_only) return true;
    line["order"] = t.order();
    line["table"] = json::parse(table_to_json(t))["table"];
    if (!filters.empty()) line["checks"] = checks;
    if (attach_classification) line["classification"] = classification_json(classify_we_delta(t));
    std::cout << line.dump() << '\n';
    return true;
  });

  if (count_only) {
    if (as_json) {
      json report = report_shell("enumerate", nullptr);
      report["order"] = order;
      report["up_to_iso"] = opts.up_to_iso;
      report["filters"] = filters;
      report["count"] = emitted;
      report["elapsed_ms"] = timer.ms();
      std::cout << report.dump(2) << '\n';
    } else {
      std::cout << emitted << '\n';
    }
  } else {
    std::cerr << "enumerated " << visited << " tables, emitted " << emitted << '\n';
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"finite semigroup property checker: congruence chains, weak exponentiality, "
               "semilattice-of-nil splits, exhaustive searches"};
  app.require_subcommand(1);
  bool as_json = false;

  // check
  auto* check = app.add_subcommand("check", "evaluate properties of one table");
  std::string check_file, check_props;
  int max_degree = 4;
  check->add_option("file", check_file, "table file (text or JSON)")->required();
  check->add_option("--props", check_props,
                    "comma list: delta,we,nil,rcomm,medial,leftcomm,rightcomm,permutative,ideal-chain "
                    "(default: all)");
  check->add_option("--max-degree", max_degree, "permutational identity degree bound")->default_val(4);
  bool with_j_structure = false;
  check->add_flag("--j-structure", with_j_structure,
                  "include the J-class report (topological ideal order)");
  check->add_flag("--json", as_json, "machine-readable output");

  // classify
  auto* classify = app.add_subcommand("classify", "match a table against the weakly exponential "
                                                  "chain-congruence templates");
  std::string classify_file;
  classify->add_option("file", classify_file)->required();
  classify->add_flag("--json", as_json, "machine-readable output");

  // theorem1
  auto* theorem1 = app.add_subcommand("theorem1", "evaluate the five T2R conditions on every band-pair split");
  std::string theorem1_file;
  bool uncorrected = false;
  theorem1->add_option("file", theorem1_file)->required();
  theorem1->add_flag("--uncorrected-cond5", uncorrected,
                     "use the historical condition-5 guard (|J_b| = 2 alone)");
  theorem1->add_flag("--json", as_json, "machine-readable output");

  // search-t2r
  auto* search = app.add_subcommand("search-t2r", "exhaustive shape-constrained search for a T2R semigroup");
  int max_order = 7;
  bool no_p6 = false, no_p7 = false, above_cap = false;
  std::string checkpoint_file, resume_file;
  std::uint64_t checkpoint_every = 0, node_budget = 0;
  search->add_option("--max-order", max_order)->default_val(7);
  search->add_flag("--no-prune-p6", no_p6, "disable the fixed-element pruning rule");
  search->add_flag("--no-prune-p7", no_p7, "disable the S0-square pruning rule");
  search->add_option("--checkpoint", checkpoint_file, "write checkpoints to this file");
  search->add_option("--checkpoint-every", checkpoint_every, "placements between checkpoint writes");
  search->add_option("--resume", resume_file, "resume from a checkpoint file");
  search->add_option("--node-budget", node_budget, "suspend after this many placements");
  search->add_flag("--above-cap", above_cap, "allow max-order beyond the default cap (slow)");
  search->add_flag("--json", as_json, "machine-readable output");

  // enumerate
  auto* enumerate = app.add_subcommand("enumerate", "stream all semigroups of one order");
  int enum_order = 0, threads = 1, enum_max_degree = 4;
  bool labeled = false, count_only = false, enum_above_cap = false;
  std::string filter_csv;
  enumerate->add_option("--order", enum_order)->required();
  enumerate->add_flag("--labeled", labeled, "all tables on a fixed element set, not up to isomorphism");
  enumerate->add_flag("--count-only", count_only, "print only the count");
  enumerate->add_option("--filter", filter_csv, "emit only tables where these properties hold (comma list)");
  enumerate->add_option("--threads", threads)->default_val(1);
  enumerate->add_option("--max-degree", enum_max_degree, "bound for the permutative filter")->default_val(4);
  enumerate->add_flag("--above-cap", enum_above_cap, "allow orders beyond the default cap (slow)");
  enumerate->add_flag("--json", as_json, "machine-readable output");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  try {
    if (*check) return run_check(check_file, check_props, max_degree, with_j_structure, as_json);
    if (*classify) return run_classify(classify_file, as_json);
    if (*theorem1) return run_theorem1(theorem1_file, uncorrected, as_json);
    if (*search)
      return run_search(max_order, no_p6, no_p7, checkpoint_file, checkpoint_every, resume_file, node_budget,
                        above_cap, as_json);
    if (*enumerate)
      return run_enumerate(enum_order, labeled, count_only, filter_csv, threads, enum_max_degree,
                           enum_above_cap, as_json);
  } catch (const ClassificationGap& e) {
    std::cerr << "CLASSIFICATION FALSIFIED: " << e.what() << '\n';
    return 3;
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 2;
  }
  return 2;
}
