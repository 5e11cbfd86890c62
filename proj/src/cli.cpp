#include "hwiener/cli.hpp"

#include <algorithm>
#include <fstream>
#include <iostream>
#include <numeric>
#include <random>
#include <sstream>

#include "CLI11.hpp"

#include "hwiener/closed_forms.hpp"
#include "hwiener/constructors.hpp"
#include "hwiener/enumeration.hpp"
#include "hwiener/errors.hpp"
#include "hwiener/extremal.hpp"
#include "hwiener/indices.hpp"
#include "hwiener/proof_moves.hpp"
#include "hwiener/report_io.hpp"

namespace hwiener::cli {

namespace {

class UsageError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

void require(bool ok, const std::string& what) {
  if (!ok) throw UsageError(what);
}

WeightFunction weight_of(const RunConfig& c) {
  require(!c.weight_spec.empty(), c.subcommand + " needs --weight");
  return parse_weight_spec(c.weight_spec);
}

Shard shard_of(const RunConfig& c) { return c.shard ? Shard::parse(*c.shard) : Shard{}; }

int cap_of(const RunConfig& c, int fallback) {
  if (!c.cap) return fallback;
  require(*c.cap >= 3 && *c.cap <= kHardCap, "--cap must lie in 3.." + std::to_string(kHardCap));
  return *c.cap;
}

void print_values(const std::vector<IndexValue>& values, bool single, OutputFormat format, std::ostream& out) {
  switch (format) {
    case OutputFormat::Json:
      if (single) {
        out << to_json(values.front()).dump(2) << "\n";
      } else {
        nlohmann::json arr = nlohmann::json::array();
        for (const auto& v : values) arr.push_back(to_json(v));
        out << arr.dump(2) << "\n";
      }
      break;
    case OutputFormat::Csv:
      out << to_csv(values);
      break;
    case OutputFormat::Plain:
      for (const auto& v : values) out << v.index_name << " = " << v.value_string() << " (" << to_string(v.mode()) << ")\n";
      break;
  }
}

int run_compute(const RunConfig& c, std::ostream& out, std::ostream& err) {
  require(!c.graph_path.empty(), "compute needs --graph");
  require(!c.weight_spec.empty() || c.all_named, "compute needs --weight or --all-named");
  const Graph g = read_edge_list_file(c.graph_path).graph;
  std::optional<WeightFunction> h;
  if (!c.weight_spec.empty()) h = parse_weight_spec(c.weight_spec);
  auto evaluate = [&](const Graph& graph) {
    std::vector<IndexValue> values;
    if (h) values.push_back(w_h(graph, *h));
    if (c.all_named) {
      auto named = all_named_indices(graph, c.q);
      values.insert(values.end(), named.begin(), named.end());
    }
    return values;
  };
  const auto values = evaluate(g);
  int status = kExitOk;
  if (c.relabelings > 0) {
    std::mt19937_64 rng(c.seed);
    std::vector<Vertex> perm(g.order());
    for (int i = 0; i < c.relabelings; ++i) {
      std::iota(perm.begin(), perm.end(), 0);
      std::shuffle(perm.begin(), perm.end(), rng);
      const auto again = evaluate(g.relabeled(perm));
      for (std::size_t k = 0; k < values.size(); ++k) {
        if (!same_value(values[k], again[k], c.tolerance)) {
          err << "error: " << values[k].index_name << " changed under relabeling " << i << ": "
              << values[k].value_string() << " vs " << again[k].value_string() << "\n";
          status = kExitClaimViolated;
        }
      }
    }
  }
  print_values(values, values.size() == 1 && !c.all_named, c.format, out);
  return status;
}

int run_construct(const RunConfig& c, std::ostream& out, std::ostream&) {
  Graph g;
  if (c.family == "path") {
    g = path(c.n);
  } else if (c.family == "cycle") {
    g = cycle(c.n);
  } else if (c.family == "star") {
    g = star(c.n);
  } else if (c.family == "jn") {
    g = j_graph(c.n);
  } else if (c.family == "grn") {
    g = g_rn(c.r, c.n);
  } else {
    throw UsageError("unknown family '" + c.family + "' (path, cycle, star, jn, grn)");
  }
  const auto text = to_edge_list(g);
  if (c.out_path.empty()) {
    out << text;
  } else {
    std::ofstream f(c.out_path);
    if (!f) throw std::runtime_error("cannot write '" + c.out_path + "'");
    f << text;
  }
  return kExitOk;
}

int run_closed_form(const RunConfig& c, std::ostream& out, std::ostream&) {
  const auto h = weight_of(c);
  IndexValue v;
  if (c.formula == "path") {
    v = wh_path(c.n, h);
  } else if (c.formula == "cycle") {
    v = wh_cycle(c.n, h);
  } else if (c.formula == "jn") {
    v = wh_jn(c.n, h);
  } else if (c.formula == "F") {
    v = f_closed(c.r, c.n, h);
  } else {
    throw UsageError("unknown formula '" + c.formula + "' (path, cycle, jn, F)");
  }
  print_values({v}, true, c.format, out);
  return kExitOk;
}

int run_enumerate(const RunConfig& c, std::ostream& out, std::ostream&) {
  EnumerationOptions opts{cap_of(c, c.unlabeled ? kUnlabeledCap : kLabeledCap), shard_of(c)};
  std::vector<Graph> graphs;
  std::uint64_t count = 0;
  if (c.unlabeled) {
    graphs = enumerate_unicyclic_unlabeled(c.n, opts);
    count = graphs.size();
  } else if (c.count_only) {
    count = count_unicyclic_labeled(c.n, opts);
  } else {
    graphs = enumerate_unicyclic_labeled(c.n, opts);
    count = graphs.size();
  }
  const std::string shard = std::to_string(opts.shard.index) + "/" + std::to_string(opts.shard.count);
  switch (c.format) {
    case OutputFormat::Json: {
      nlohmann::json j{{"n", c.n}, {"unlabeled", c.unlabeled}, {"shard", shard}, {"count", std::to_string(count)}};
      if (!c.count_only) {
        nlohmann::json arr = nlohmann::json::array();
        for (const auto& g : graphs) arr.push_back(to_edge_list(g));
        j["graphs"] = arr;
      }
      out << j.dump(2) << "\n";
      break;
    }
    case OutputFormat::Csv:
      out << "n,unlabeled,shard,count\n"
          << c.n << "," << (c.unlabeled ? "true" : "false") << "," << shard << "," << count << "\n";
      break;
    case OutputFormat::Plain:
      if (!c.count_only) {
        for (std::size_t i = 0; i < graphs.size(); ++i) out << "# graph " << i << "\n" << to_edge_list(graphs[i]);
      }
      out << "# count " << count << "\n";
      break;
  }
  return kExitOk;
}

void print_report_plain(const VerificationReport& r, std::ostream& out) {
  auto value = [](const std::optional<IndexValue>& v) { return v ? v->value_string() : std::string("-"); };
  out << "n = " << r.n << "\n"
      << "weight = " << r.weight << " (" << to_string(r.monotonicity) << ")\n"
      << "graphs scanned = " << r.graphs_scanned << (r.partial() ? " (partial)" : "") << "\n"
      << "min = " << value(r.min_value) << " over " << r.argmin_forms.size() << " class(es); expected "
      << value(r.expected_min) << "\n"
      << "max = " << value(r.max_value) << " over " << r.argmax_forms.size() << " class(es); expected "
      << value(r.expected_max) << "\n"
      << "lower bound value: " << to_string(r.claims.lower_value) << "\n"
      << "lower bound uniqueness: " << to_string(r.claims.lower_unique) << "\n"
      << "upper bound value: " << to_string(r.claims.upper_value) << "\n"
      << "upper bound uniqueness: " << to_string(r.claims.upper_unique) << "\n";
  if (r.counterexample) out << "# counterexample\n" << *r.counterexample;
}

int run_verify(const RunConfig& c, std::ostream& out, std::ostream& err) {
  const auto h = weight_of(c);
  VerifyOptions opts;
  opts.enumeration.cap = cap_of(c, kLabeledCap);
  opts.rel_tol = c.tolerance;
  VerificationReport report;
  if (c.shard || c.threads <= 1) {
    opts.enumeration.shard = shard_of(c);
    report = verify_theorem(c.n, h, opts);
  } else {
    report = verify_theorem_sharded(c.n, h, c.threads, c.threads, opts);
  }
  switch (c.format) {
    case OutputFormat::Json:
      out << to_json(report).dump(2) << "\n";
      break;
    case OutputFormat::Csv:
      out << to_csv(report);
      if (report.counterexample) err << "counterexample:\n" << *report.counterexample;
      break;
    case OutputFormat::Plain:
      print_report_plain(report, out);
      break;
  }
  if (!report.passed()) {
    err << "error: theorem claim violated for n = " << c.n << ", weight " << report.weight << "\n";
    return kExitClaimViolated;
  }
  return kExitOk;
}

int run_lemmas(const RunConfig& c, std::ostream& out, std::ostream& err) {
  const auto h = weight_of(c);
  const auto checks = check_f3_dominance(c.n_max, h, c.tolerance);
  const auto violations = std::count_if(checks.begin(), checks.end(), [](const auto& x) { return !x.pass; });
  switch (c.format) {
    case OutputFormat::Json:
      out << nlohmann::json{{"weight", h.description()},
                            {"n_max", c.n_max},
                            {"checks", to_json(checks)},
                            {"violations", violations}}
                 .dump(2)
          << "\n";
      break;
    case OutputFormat::Csv:
      out << to_csv(checks);
      break;
    case OutputFormat::Plain:
      for (const auto& x : checks) {
        if (!x.pass) out << "violation: F(3," << x.n << ") = " << x.f3.value_string() << ", F(" << x.r << "," << x.n
                         << ") = " << x.fr.value_string() << "\n";
      }
      out << checks.size() << " comparisons, " << violations << " violations\n";
      break;
  }
  if (violations > 0) {
    err << "error: " << violations << " dominance violations\n";
    return kExitClaimViolated;
  }
  return kExitOk;
}

int run_search(const RunConfig& c, std::ostream& out, std::ostream& err) {
  require(!c.graph_path.empty(), "search needs --graph");
  const auto h = weight_of(c);
  const Graph g = read_edge_list_file(c.graph_path).graph;
  const auto result = local_search_max(g, h);
  bool increasing = true;
  for (const auto& s : result.steps) increasing = increasing && compare_values(s.after, s.before, c.tolerance) > 0;
  switch (c.format) {
    case OutputFormat::Json: {
      auto j = to_json(result);
      j["weight"] = h.description();
      j["cycle_length"] = find_cycle(result.graph).length();
      out << j.dump(2) << "\n";
      break;
    }
    case OutputFormat::Csv:
      out << "step,kind,removed,added,before,after\n";
      for (std::size_t i = 0; i < result.steps.size(); ++i) {
        const auto& s = result.steps[i];
        out << i << "," << (s.move.kind == MoveKind::TerminalMerge ? "terminal_merge" : "tail_rebalance") << ","
            << s.move.removed.first << "-" << s.move.removed.second << "," << s.move.added.first << "-"
            << s.move.added.second << "," << s.before.value_string() << "," << s.after.value_string() << "\n";
      }
      break;
    case OutputFormat::Plain:
      for (const auto& s : result.steps) {
        out << (s.move.kind == MoveKind::TerminalMerge ? "terminal_merge" : "tail_rebalance") << ": W_h "
            << s.before.value_string() << " -> " << s.after.value_string() << "\n";
      }
      out << "# result: cycle length " << find_cycle(result.graph).length() << "\n" << to_edge_list(result.graph);
      break;
  }
  if (!increasing) {
    err << "error: a move did not strictly increase W_h\n";
    return kExitClaimViolated;
  }
  return kExitOk;
}

}  // namespace

std::optional<int> parse_command_line(int argc, const char* const* argv, RunConfig& config, std::ostream& out,
                                      std::ostream& err) {
  CLI::App app{"Generalized Wiener indices and extremal unicyclic graphs", "hwiener"};
  app.require_subcommand(1);

  std::string format = "plain";
  bool json = false;
  bool csv = false;
  int cap = 0;
  auto add_common = [&](CLI::App* sub) {
    sub->add_option("--format", format, "Output format")->check(CLI::IsMember({"plain", "json", "csv"}));
    sub->add_flag("--json", json, "Shorthand for --format json");
    sub->add_flag("--csv", csv, "Shorthand for --format csv");
    sub->add_option("--tol", config.tolerance, "Relative tolerance for floating comparisons");
    sub->add_option("--seed", config.seed, "Seed for randomized checks");
  };

  auto* compute = app.add_subcommand("compute", "Evaluate W_h or the named indices of a graph");
  compute->add_option("--graph", config.graph_path, "Edge-list file")->required();
  compute->add_option("--weight", config.weight_spec, "power:L | q1:Q | q2:Q | q3:Q | table:v1,v2,...");
  compute->add_flag("--all-named", config.all_named, "Also emit every named index");
  compute->add_option("--q", config.q, "q used by the named q-Wiener indices");
  compute->add_option("--relabelings", config.relabelings, "Random relabelings to cross-check invariance");
  add_common(compute);

  auto* construct = app.add_subcommand("construct", "Write a named graph as an edge list");
  construct->add_option("--family", config.family, "path | cycle | star | jn | grn")->required();
  construct->add_option("--n", config.n, "Vertex count")->required();
  construct->add_option("--r", config.r, "Cycle length (grn)");
  construct->add_option("--out", config.out_path, "Output file (default stdout)");
  add_common(construct);

  auto* closed = app.add_subcommand("closed-form", "Evaluate a closed-form expression");
  closed->add_option("--formula", config.formula, "path | cycle | jn | F")->required();
  closed->add_option("--n", config.n, "Vertex count")->required();
  closed->add_option("--r", config.r, "Cycle length (F)");
  closed->add_option("--weight", config.weight_spec, "Weight spec")->required();
  add_common(closed);

  auto* enumerate = app.add_subcommand("enumerate", "List unicyclic graphs on n vertices");
  enumerate->add_option("--n", config.n, "Vertex count")->required();
  enumerate->add_flag("--unlabeled", config.unlabeled, "One graph per isomorphism class");
  enumerate->add_flag("--count-only", config.count_only, "Only print the count");
  enumerate->add_option("--shard", config.shard, "Shard i/k of the Prüfer index space");
  enumerate->add_option("--cap", cap, "Enumeration cap override (<= 10)");
  add_common(enumerate);

  auto* verify = app.add_subcommand("verify", "Exhaustively check the unicyclic bounds");
  verify->add_option("--n", config.n, "Vertex count")->required();
  verify->add_option("--weight", config.weight_spec, "Weight spec")->required();
  verify->add_option("--shard", config.shard, "Shard i/k of the Prüfer index space");
  verify->add_option("--threads", config.threads, "Run this many shards concurrently");
  verify->add_option("--cap", cap, "Enumeration cap override (<= 10)");
  add_common(verify);

  auto* lemmas = app.add_subcommand("lemmas", "Check F_h(3,n) against F_h(r,n)");
  lemmas->add_option("--nmax", config.n_max, "Largest n")->required();
  lemmas->add_option("--weight", config.weight_spec, "Weight spec")->required();
  add_common(lemmas);

  auto* search = app.add_subcommand("search", "Run the branch-relocation local search");
  search->add_option("--graph", config.graph_path, "Edge-list file")->required();
  search->add_option("--weight", config.weight_spec, "Weight spec")->required();
  add_common(search);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitUsage;
  }
  config.subcommand = app.get_subcommands().front()->get_name();
  config.format = json ? OutputFormat::Json
                : csv  ? OutputFormat::Csv
                : format == "json" ? OutputFormat::Json
                : format == "csv"  ? OutputFormat::Csv
                                   : OutputFormat::Plain;
  if (cap != 0) config.cap = cap;
  return std::nullopt;
}

int run(const RunConfig& config, std::ostream& out, std::ostream& err) {
  try {
    if (config.subcommand == "compute") return run_compute(config, out, err);
    if (config.subcommand == "construct") return run_construct(config, out, err);
    if (config.subcommand == "closed-form") return run_closed_form(config, out, err);
    if (config.subcommand == "enumerate") return run_enumerate(config, out, err);
    if (config.subcommand == "verify") return run_verify(config, out, err);
    if (config.subcommand == "lemmas") return run_lemmas(config, out, err);
    if (config.subcommand == "search") return run_search(config, out, err);
    err << "error: unknown subcommand '" << config.subcommand << "'\n";
    return kExitUsage;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  }
}

int main_entry(int argc, const char* const* argv) {
  RunConfig config;
  if (auto code = parse_command_line(argc, argv, config, std::cout, std::cerr)) return *code;
  return run(config, std::cout, std::cerr);
}

}  // namespace hwiener::cli
