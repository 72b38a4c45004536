#include "cli.hpp"

#include <algorithm>
#include <chrono>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>

#include <CLI11.hpp>

#include "tdc/canonical.hpp"
#include "tdc/coloring.hpp"
#include "tdc/errors.hpp"
#include "tdc/explorer.hpp"
#include "tdc/families.hpp"
#include "tdc/graph.hpp"
#include "tdc/perturbation.hpp"
#include "tdc/report.hpp"
#include "tdc/solver.hpp"
#include "tdc/theorems.hpp"

namespace tdc::cli {

namespace {

constexpr const char* kFooter =
    "Graph inputs: a family spec name:arg(:arg), a graph6 string, or '-' for one graph6 line on stdin.\n"
    "Families: path:n cycle:n complete:n complete_bipartite:a:b star:n friendship:n book:n\n"
    "          complete_minus_edge:n empty:n\n"
    "Exit codes: 0 ok, 1 violated claims, 2 parse/usage error, 3 cap exceeded, 4 undefined instance.";

class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct InputFlags {
  std::string graph;
  std::string edges;
};

Graph load_graph(const std::string& source, std::istream& in) {
  if (source == "-") {
    std::string line;
    while (line.empty() && std::getline(in, line)) {
      while (!line.empty() && (line.back() == '\r' || line.back() == ' ')) line.pop_back();
    }
    if (line.empty()) throw std::invalid_argument("expected a graph6 line on stdin");
    return parse_graph6(line);
  }
  return parse_graph_spec(source);
}

Graph load_input(const InputFlags& flags, std::istream& in) {
  if (flags.graph.empty() == flags.edges.empty()) {
    throw UsageError("give exactly one input: --graph SPEC or --edges FILE");
  }
  if (!flags.graph.empty()) return load_graph(flags.graph, in);
  std::ifstream file(flags.edges);
  if (!file) throw std::invalid_argument("cannot open edge list '" + flags.edges + "'");
  return read_edge_list(file);
}

std::vector<int> parse_int_list(const std::string& text) {
  std::vector<int> out;
  std::stringstream s(text);
  std::string token;
  while (std::getline(s, token, ',')) {
    if (token.empty()) continue;
    std::size_t used = 0;
    const int v = std::stoi(token, &used);
    if (used != token.size()) throw std::invalid_argument("bad integer '" + token + "'");
    out.push_back(v);
  }
  return out;
}

EdgeSet parse_edge_list_arg(const std::string& text) {
  EdgeSet out;
  std::stringstream s(text);
  std::string token;
  while (std::getline(s, token, ',')) {
    const std::size_t dash = token.find('-');
    if (dash == std::string::npos) throw std::invalid_argument("edge '" + token + "' must look like u-v");
    out.push_back(Edge{std::stoi(token.substr(0, dash)), std::stoi(token.substr(dash + 1))}.normalized());
  }
  return out;
}

void emit(std::ostream& out, const Json& j, const std::string& format) {
  if (format == "json") {
    out << j.dump() << '\n';
    return;
  }
  for (const auto& [key, value] : j.items()) {
    out << std::left << std::setw(17) << key << ' ' << (value.is_string() ? value.get<std::string>() : value.dump()) << '\n';
  }
}

SolverOptions solver_options(int max_n, std::optional<long> budget_ms) {
  SolverOptions o;
  o.max_order = max_n;
  if (budget_ms) o.time_budget = std::chrono::milliseconds(*budget_ms);
  return o;
}

// Subcommands --------------------------------------------------------------

int cmd_invariants(const Graph& g, const SolverOptions& solver, bool brute, bool timing, const std::string& format,
                   std::ostream& out) {
  if (g.order() > solver.max_order) throw CapExceeded("graph order " + std::to_string(g.order()) + " exceeds --max-n");
  Json j;
  j["graph6"] = write_graph6(g);
  j["n"] = g.order();
  j["m"] = g.size();
  j["chi"] = chromatic_number(g).value;
  const bool defined = !g.empty() && !has_isolated_vertex(g);
  if (!defined) {
    j["gamma_t"] = "undefined";
    j["tdc"] = "undefined";
    j["witness"] = "undefined";
    emit(out, j, format);
    return kExitOk;
  }
  j["gamma_t"] = total_domination_number(g).value;
  const TdcResult r = tdc_number(g, solver);
  if (r.exact()) {
    j["tdc"] = *r.value;
    j["witness"] = to_json(*r.witness);
  } else {
    j["tdc"] = "unknown";
    j["witness"] = "unknown";
  }
  if (brute) j["brute_force"] = g.order() <= kBruteForceMaxOrder ? Json(tdc_brute_force(g)) : Json("skipped-cap");
  Json stats;
  stats["lower_bound"] = r.lower_bound;
  stats["nodes"] = r.stats.nodes;
  if (timing) stats["elapsed_us"] = r.stats.elapsed.count();
  j["stats"] = stats;
  emit(out, j, format);
  return kExitOk;
}

int cmd_perturb(const Graph& g, const std::string& kind, DegenerateConvention convention, const SolverOptions& solver,
                std::optional<int> trace, const std::string& format, std::ostream& out) {
  PerturbationKind k;
  if (kind == "stability") {
    k = PerturbationKind::stability;
  } else if (kind == "bondage") {
    k = PerturbationKind::bondage;
  } else {
    throw UsageError("--kind must be stability or bondage");
  }
  PerturbationCaps caps;
  const PerturbationResult r =
      k == PerturbationKind::stability ? stability(g, convention, caps, solver) : bondage(g, convention, caps, solver);
  Json j;
  j["graph6"] = write_graph6(g);
  const Json body = to_json(r);
  for (const auto& [key, value] : body.items()) j[key] = value;
  if (trace) {
    Json rows = Json::array();
    for (const TraceRow& row : perturbation_trace(g, k, *trace, caps, solver)) rows.push_back(to_json(row));
    j["trace"] = rows;
  }
  emit(out, j, format);
  return kExitOk;
}

struct BuildFlags {
  std::string op;
  std::vector<std::string> operands;
  int r = -1;
  std::string clique1;
  std::string clique2;
  std::string identification;
  std::string remove;
};

int cmd_build(const BuildFlags& f, std::istream& in, std::ostream& out) {
  auto operand = [&](std::size_t i) {
    if (i >= f.operands.size()) throw UsageError("build " + f.op + ": missing operand");
    return load_graph(f.operands[i], in);
  };
  auto arity = [&](std::size_t n) {
    if (f.operands.size() != n) {
      throw UsageError("build " + f.op + " takes " + std::to_string(n) + " operand(s)");
    }
  };
  Graph result;
  if (f.op == "ncorona") {
    arity(2);
    result = neighbourhood_corona(operand(0), operand(1));
  } else if (f.op == "glue") {
    arity(2);
    const Graph a = operand(0);
    const Graph b = operand(1);
    if (f.clique1.empty() && f.clique2.empty()) {
      if (f.r < 0) throw UsageError("build glue needs --r or explicit --clique1/--clique2");
      result = r_gluing(a, b, f.r);
    } else {
      const std::vector<int> c1 = parse_int_list(f.clique1);
      const std::vector<int> c2 = parse_int_list(f.clique2);
      if (f.r >= 0 && static_cast<std::size_t>(f.r) != c1.size()) throw UsageError("--r disagrees with --clique1");
      std::vector<int> ident = parse_int_list(f.identification);
      if (f.identification.empty()) {
        for (std::size_t i = 0; i < c1.size(); ++i) ident.push_back(static_cast<int>(i));
      }
      result = r_gluing(a, b, c1, c2, ident);
    }
  } else if (f.op == "product") {
    arity(2);
    result = cartesian_product(operand(0), operand(1));
  } else if (f.op == "union") {
    arity(2);
    result = disjoint_union(operand(0), operand(1));
  } else if (f.op == "complement") {
    arity(1);
    result = complement(operand(0));
  } else if (f.op == "delete-vertices") {
    arity(1);
    result = delete_vertices(operand(0), parse_int_list(f.remove));
  } else if (f.op == "delete-edges") {
    arity(1);
    result = delete_edges(operand(0), parse_edge_list_arg(f.remove));
  } else if (f.op == "canonical") {
    arity(1);
    result = canonical_graph(operand(0));
  } else if (f.op == "show") {
    arity(1);
    result = operand(0);
  } else {
    throw UsageError("unknown build operation '" + f.op + "'");
  }
  out << write_graph6(result) << '\n';
  return kExitOk;
}

int cmd_verify_coloring(const Graph& g, const std::string& path, const std::string& format, std::ostream& out) {
  std::ifstream file(path);
  if (!file) throw std::invalid_argument("cannot open coloring file '" + path + "'");
  const Coloring f = read_coloring(file, g.order());
  Json j;
  j["graph6"] = write_graph6(g);
  j["k"] = f.num_classes();
  j["proper"] = is_proper(g, f);
  const TdStatus status = td_status(g, f);
  j["td_coloring"] = status == TdStatus::undefined ? Json("undefined") : Json(status == TdStatus::td_coloring);
  Json table = Json::array();
  for (const auto& c : td_witness_table(g, f)) table.push_back(c ? Json(*c) : Json(nullptr));
  j["dominated_class"] = table;
  emit(out, j, format);
  return status == TdStatus::undefined ? kExitUndefined : kExitOk;
}

SuiteConfig load_suite_config(const std::string& path) {
  SuiteConfig c;
  if (path.empty()) return c;
  std::ifstream file(path);
  if (!file) throw std::invalid_argument("cannot open config '" + path + "'");
  Json j;
  try {
    j = Json::parse(file);
  } catch (const Json::parse_error& e) {
    throw std::invalid_argument(std::string("config parse failure: ") + e.what());
  }
  auto get = [&](const char* key, auto& field) {
    if (j.contains(key)) field = j.at(key).get<std::remove_reference_t<decltype(field)>>();
  };
  if (j.contains("claims")) {
    const Json& claims = j.at("claims");
    c.claims = claims.is_string() ? parse_claims(claims.get<std::string>())
                                  : parse_claims([&] {
                                      std::string s;
                                      for (const auto& item : claims) s += (s.empty() ? "" : ",") + item.get<std::string>();
                                      return s.empty() ? std::string("none") : s;
                                    }());
  } else {
    c.claims = claim_families();
  }
  get("path_max", c.path_max);
  get("cycle_max", c.cycle_max);
  get("sweep_max_n", c.sweep_max_n);
  get("ncorona_pool_max_n", c.ncorona_pool_max_n);
  get("random_pairs", c.random_pairs);
  get("random_pair_max_order", c.random_pair_max_order);
  get("gluing_pool_max_n", c.gluing_pool_max_n);
  get("corollary_max_n", c.corollary_max_n);
  get("nordhaus_gaddum_max_n", c.nordhaus_gaddum_max_n);
  get("seed", c.seed);
  get("max_n", c.context.solver.max_order);
  if (j.contains("corollary_budget_ms")) c.corollary_budget = std::chrono::milliseconds(j.at("corollary_budget_ms").get<long>());
  if (j.contains("convention")) c.context.convention = parse_convention(j.at("convention").get<std::string>());
  return c;
}

}  // namespace

int run(const std::vector<std::string>& args, std::istream& in, std::ostream& out, std::ostream& err) {
  CLI::App app{"Exact total dominator chromatic numbers, graph operations, and claim verification", "tdc"};
  app.footer(kFooter);
  app.require_subcommand(1);

  std::string format = "json";
  std::string output;
  long seed = 1;
  std::string convention_text = "undefined_counts_as_changed";
  std::optional<long> budget_ms;
  int max_n = kDefaultMaxOrder;
  bool timing = false;

  auto add_common = [&](CLI::App* sub) {
    sub->add_option("--format", format, "json or table")->check(CLI::IsMember({"json", "table"}));
    sub->add_option("--output", output, "Write the result to this file instead of stdout");
  };
  auto add_solver = [&](CLI::App* sub) {
    sub->add_option("--max-n", max_n, "Largest graph order handed to the exact solver")->check(CLI::PositiveNumber);
    sub->add_option("--time-budget", budget_ms, "Per-solve time budget in milliseconds")->check(CLI::PositiveNumber);
  };
  auto add_convention = [&](CLI::App* sub) {
    sub->add_option("--convention", convention_text,
                    "undefined_counts_as_changed (alias changed) or skip_undefined (alias skip)");
  };

  InputFlags input;
  auto add_input = [&](CLI::App* sub) {
    sub->add_option("--graph", input.graph, "Family spec, graph6 string, or '-'");
    sub->add_option("--edges", input.edges, "Edge-list file: \"n m\" then m lines \"u v\"");
  };

  CLI::App* invariants = app.add_subcommand("invariants", "chi, gamma_t and the TDC-number with a witness");
  add_input(invariants);
  add_common(invariants);
  add_solver(invariants);
  bool brute = false;
  invariants->add_flag("--brute-force", brute, "Also run the brute-force oracle (n <= 8)");
  invariants->add_flag("--timing", timing, "Include elapsed time in stats (breaks byte-reproducibility)");

  CLI::App* perturb = app.add_subcommand("perturb", "TDC-stability or TDC-bondage with a witness");
  add_input(perturb);
  add_common(perturb);
  add_solver(perturb);
  add_convention(perturb);
  std::string kind;
  perturb->add_option("--kind", kind, "stability or bondage")->required();
  std::optional<int> trace;
  perturb->add_option("--trace", trace, "Include every removal up to this size");

  CLI::App* build = app.add_subcommand("build", "Construct a graph and print its graph6");
  BuildFlags bf;
  build->add_option("op", bf.op,
                    "ncorona | glue | product | union | complement | delete-vertices | delete-edges | canonical | show")
      ->required();
  build->add_option("operands", bf.operands, "Graph operands");
  build->add_option("--r", bf.r, "Clique size for glue");
  build->add_option("--clique1", bf.clique1, "Comma-separated clique in the first operand");
  build->add_option("--clique2", bf.clique2, "Comma-separated clique in the second operand");
  build->add_option("--identification", bf.identification,
                    "clique2 index matched with each clique1 position (default identity)");
  build->add_option("--remove", bf.remove, "Vertices '0,1' or edges '0-1,2-3' to delete");

  CLI::App* verify = app.add_subcommand("verify", "Run the claim suite, or check a colouring with --coloring");
  add_common(verify);
  add_convention(verify);
  std::string claims = "all";
  std::string config_path;
  std::string coloring_path;
  verify->add_option("--claims", claims, "Comma list of claim families, 'all' or 'none'");
  verify->add_option("--config", config_path, "JSON config file (flags given on the command line win)");
  verify->add_option("--seed", seed, "Seed for random pairs");
  verify->add_option("--max-n", max_n, "Solver order cap")->check(CLI::PositiveNumber);
  verify->add_option("--coloring", coloring_path, "Colouring file (\"k\" then lines \"v c\") to check against --graph");
  verify->add_option("--graph", input.graph, "Graph for --coloring");
  verify->add_option("--edges", input.edges, "Edge-list graph for --coloring");

  CLI::App* explore = app.add_subcommand("explore", "Scan small graphs for the low-degree stability conjecture");
  add_common(explore);
  int scan_max = 7;
  std::string population = "connected";
  std::string scan_convention = "undefined_counts_as_changed";
  explore->add_option("--max-n", scan_max, "Largest order scanned (<= 8)")->check(CLI::Range(2, kMaxEnumerationOrder));
  explore->add_option("--population", population, "connected, no_isolated_vertex, or both")
      ->check(CLI::IsMember({"connected", "no_isolated_vertex", "both"}));
  explore->add_option("--convention", scan_convention, "changed, skip, or both");
  explore->add_option("--seed", seed, "Accepted for symmetry with verify; the scan is exhaustive");

  std::vector<std::string> reversed(args.rbegin(), args.rend() - (args.empty() ? 0 : 1));
  try {
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitParse;
  }

  std::ofstream file;
  auto sink = [&]() -> std::ostream& {
    if (output.empty()) return out;
    file.open(output);
    if (!file) throw std::invalid_argument("cannot write '" + output + "'");
    return file;
  };

  try {
    const SolverOptions solver = solver_options(max_n, budget_ms);
    if (invariants->parsed()) return cmd_invariants(load_input(input, in), solver, brute, timing, format, sink());
    if (perturb->parsed()) {
      return cmd_perturb(load_input(input, in), kind, parse_convention(convention_text), solver, trace, format, sink());
    }
    if (build->parsed()) return cmd_build(bf, in, out);
    if (verify->parsed()) {
      if (!coloring_path.empty()) return cmd_verify_coloring(load_input(input, in), coloring_path, format, sink());
      SuiteConfig config = load_suite_config(config_path);
      if (config_path.empty() || verify->count("--claims")) config.claims = parse_claims(claims);
      if (config_path.empty() || verify->count("--seed")) config.seed = static_cast<std::uint64_t>(seed);
      if (config_path.empty() || verify->count("--max-n")) config.context.solver.max_order = max_n;
      if (config_path.empty() || verify->count("--convention")) config.context.convention = parse_convention(convention_text);
      const TheoremReport report = run_suite(config);
      if (!output.empty()) {
        write_report_jsonl(sink(), report);
        if (format == "table") write_report_table(out, report);
      } else if (format == "json") {
        write_report_jsonl(out, report);
      } else {
        write_report_table(out, report);
      }
      return report.unflagged_violations() > 0 ? kExitViolated : kExitOk;
    }
    if (explore->parsed()) {
      std::vector<DegenerateConvention> conventions;
      if (scan_convention == "both") {
        conventions = {DegenerateConvention::undefined_counts_as_changed, DegenerateConvention::skip_undefined};
      } else {
        conventions = {parse_convention(scan_convention)};
      }
      std::vector<ScanPopulation> populations;
      if (population != "no_isolated_vertex") populations.push_back(ScanPopulation::connected);
      if (population != "connected") populations.push_back(ScanPopulation::no_isolated_vertex);
      std::vector<ConjectureFinding> findings;
      for (auto pop : populations)
        for (auto conv : conventions)
          for (auto& f : conjecture_scan(scan_max, conv, pop)) findings.push_back(std::move(f));
      if (format == "json" || !output.empty()) write_findings_jsonl(sink(), findings);
      if (format == "table") {
        const auto counter = std::count_if(findings.begin(), findings.end(),
                                           [](const ConjectureFinding& f) { return f.verdict == "counterexample"; });
        out << "findings: " << findings.size() << ", counterexamples: " << counter << '\n';
      }
      return kExitOk;
    }
  } catch (const UsageError& e) {
    err << "tdc: " << e.what() << '\n';
    return kExitParse;
  } catch (const CapExceeded& e) {
    err << "tdc: cap exceeded: " << e.what() << '\n';
    return kExitCap;
  } catch (const UndefinedInstance& e) {
    err << "tdc: undefined: " << e.what() << '\n';
    return kExitUndefined;
  } catch (const std::invalid_argument& e) {
    err << "tdc: " << e.what() << '\n';
    return kExitParse;
  }
  return kExitParse;
}

}  // namespace tdc::cli
