// bnreprog: command-line front end for Boolean-network reprogramming
// analysis. Validates models, exports graphs, enumerates fixed points and
// attractors, and computes reprogramming determinants between fixed points.

#include <chrono>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "boolnet/dot.hpp"
#include "boolnet/dynamics.hpp"
#include "boolnet/errors.hpp"
#include "boolnet/interaction.hpp"
#include "boolnet/parser.hpp"
#include "boolnet/reprog.hpp"

namespace {

using json = nlohmann::ordered_json;
using namespace boolnet;

// Exit codes shared with the test suite.
constexpr int kOk = 0;
constexpr int kParseError = 2;
constexpr int kGuardViolation = 3;
constexpr int kCapExceeded = 4;
constexpr int kBadArguments = 5;

enum class Format { text, json_fmt, dot };

struct Options {
  std::string model_path;
  std::string from;
  std::string to;
  std::string mode = "er";
  std::string method = "scc";
  Format format = Format::text;
  int max_n = AnalysisLimits{}.max_dimension;
  std::uint64_t cycle_budget = AnalysisLimits{}.cycle_budget;
  bool check_assumptions = false;
  bool antichain = false;
};

AnalysisLimits limits_of(const Options& opt) {
  AnalysisLimits limits;
  limits.max_dimension = opt.max_n;
  limits.cycle_budget = opt.cycle_budget;
  return limits;
}

BooleanNetwork load_model(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError(1, 1, "cannot read model file '" + path + "'");
  std::ostringstream text;
  text << in.rdbuf();
  return BooleanNetwork(parse_network(text.str()));
}

State parse_state_argument(const std::string& text, int n, const char* flag) {
  try {
    return parse_state(text, n);
  } catch (const ParseError& e) {
    throw std::invalid_argument(std::string(flag) + ": " + e.what());
  }
}

json indices_1based(const VertexSet& s) {
  json out = json::array();
  for (int i : s.indices()) out.push_back(i + 1);
  return out;
}

std::string name_set(const VertexSet& s, const BooleanNetwork& f) {
  std::string out = "{";
  bool first = true;
  for (int i : s.indices()) {
    if (!first) out += ", ";
    first = false;
    out += f.name(i);
  }
  return out + "}";
}

json scc_structure_json(const SccOrder& order) {
  json sccs = json::array();
  for (const VertexSet& c : order.components) sccs.push_back(indices_1based(c));
  json positive = json::array();
  for (const VertexSet& c : order.positive) positive.push_back(indices_1based(c));
  json slices = json::array();
  for (const auto& slice : order.slices) {
    json one = json::array();
    for (int i : slice)
      one.push_back(indices_1based(order.positive[static_cast<std::size_t>(i)]));
    slices.push_back(one);
  }
  return json{{"sccs", sccs}, {"positive_sccs", positive}, {"slices", slices}};
}

// --check-assumptions: the all-fixed-point guard plus a consistency note on
// the positive-cycle requirement for multistability.
struct AssumptionReport {
  int attractor_count = 0;
  int fixed_point_count = 0;
  bool all_fixed_points = false;
  bool has_positive_cycle_somewhere = false;
  bool thomas_consistent = false;
  std::string witness;  // cyclic attractor states, if any
};

AssumptionReport check_assumptions(const BooleanNetwork& f,
                                   const AnalysisLimits& limits) {
  AssumptionReport report;
  AttractorSet att = attractors(f, limits);
  report.attractor_count = static_cast<int>(att.items.size());
  for (const Attractor& a : att.items) {
    if (a.is_fixed_point()) {
      ++report.fixed_point_count;
    } else if (report.witness.empty()) {
      for (const State& s : a.states) {
        if (!report.witness.empty()) report.witness += ", ";
        report.witness += s.to_string();
      }
    }
  }
  report.all_fixed_points = report.witness.empty();
  InteractionGraph g = interaction_graph(f);
  report.has_positive_cycle_somewhere =
      has_positive_cycle(g, g.vertices(), limits.cycle_budget);
  report.thomas_consistent =
      report.attractor_count <= 1 || report.has_positive_cycle_somewhere;
  return report;
}

json assumptions_json(const AssumptionReport& r) {
  json out{{"attractors", r.attractor_count},
           {"fixed_points", r.fixed_point_count},
           {"all_attractors_are_fixed_points", r.all_fixed_points},
           {"interaction_graph_has_positive_cycle", r.has_positive_cycle_somewhere},
           {"thomas_rule_consistent", r.thomas_consistent}};
  if (!r.all_fixed_points) out["cyclic_attractor"] = r.witness;
  return out;
}

void print_assumptions_text(const AssumptionReport& r, std::ostream& out) {
  out << "attractors: " << r.attractor_count << " (" << r.fixed_point_count
      << " fixed points)\n";
  out << "all attractors are fixed points: " << (r.all_fixed_points ? "yes" : "no")
      << "\n";
  if (!r.all_fixed_points) out << "cyclic attractor: {" << r.witness << "}\n";
  out << "interaction graph has a positive cycle: "
      << (r.has_positive_cycle_somewhere ? "yes" : "no") << "\n";
  out << "multistability consistent with positive-cycle rule: "
      << (r.thomas_consistent ? "yes" : "VIOLATION") << "\n";
}

int run_check(const Options& opt) {
  if (opt.format == Format::dot)
    throw std::invalid_argument("check has no dot output");
  BooleanNetwork f = load_model(opt.model_path);
  AnalysisLimits limits = limits_of(opt);

  AssumptionReport report;
  if (opt.check_assumptions) report = check_assumptions(f, limits);

  if (opt.format == Format::json_fmt) {
    json out{{"model", json{{"n", f.dimension()}, {"nodes", f.names()}}},
             {"ok", true}};
    if (opt.check_assumptions) out["assumptions"] = assumptions_json(report);
    std::cout << out.dump(2) << "\n";
  } else {
    std::cout << "model: " << opt.model_path << "\n";
    std::cout << "nodes (n=" << f.dimension() << "):";
    for (const std::string& name : f.names()) std::cout << " " << name;
    std::cout << "\n";
    if (opt.check_assumptions) print_assumptions_text(report, std::cout);
  }
  if (opt.check_assumptions && !report.all_fixed_points) {
    std::cerr << "error: cyclic attractor present: {" << report.witness << "}\n";
    return kGuardViolation;
  }
  return kOk;
}

int run_ig(const Options& opt) {
  BooleanNetwork f = load_model(opt.model_path);
  InteractionGraph g = interaction_graph(f);
  switch (opt.format) {
    case Format::dot:
      std::cout << interaction_graph_dot(g, f.names());
      break;
    case Format::json_fmt: {
      json edges = json::array();
      for (const SignedEdge& e : g.edges())
        edges.push_back(json{{"from", e.source + 1},
                             {"to", e.target + 1},
                             {"sign", e.sign == Sign::positive ? "+" : "-"}});
      json out{{"model", json{{"n", f.dimension()}, {"nodes", f.names()}}},
               {"edges", edges}};
      std::cout << out.dump(2) << "\n";
      break;
    }
    case Format::text:
      for (const SignedEdge& e : g.edges())
        std::cout << f.name(e.source) << " -> " << f.name(e.target) << " ["
                  << (e.sign == Sign::positive ? "+" : "-") << "]\n";
      break;
  }
  return kOk;
}

int run_stg(const Options& opt) {
  BooleanNetwork f = load_model(opt.model_path);
  AnalysisLimits limits = limits_of(opt);
  switch (opt.format) {
    case Format::dot:
      std::cout << transition_graph_dot(f, limits);
      break;
    case Format::json_fmt: {
      json edges = json::array();
      for (const auto& [from, to] : transition_edges(f, limits))
        edges.push_back(json::array({from.to_string(), to.to_string()}));
      json atts = json::array();
      for (const Attractor& a : attractors(f, limits).items) {
        json states = json::array();
        for (const State& s : a.states) states.push_back(s.to_string());
        atts.push_back(json{{"states", states}, {"fixed_point", a.is_fixed_point()}});
      }
      json out{{"model", json{{"n", f.dimension()}, {"nodes", f.names()}}},
               {"edges", edges},
               {"attractors", atts}};
      std::cout << out.dump(2) << "\n";
      break;
    }
    case Format::text:
      for (const auto& [from, to] : transition_edges(f, limits))
        std::cout << from.to_string() << " -> " << to.to_string() << "\n";
      break;
  }
  return kOk;
}

int run_fixed_points(const Options& opt) {
  if (opt.format == Format::dot)
    throw std::invalid_argument("fixed-points has no dot output");
  BooleanNetwork f = load_model(opt.model_path);
  std::vector<State> fps = fixed_points(f, limits_of(opt));
  if (opt.format == Format::json_fmt) {
    json out = json::array();
    for (const State& s : fps) out.push_back(s.to_string());
    std::cout << out.dump(2) << "\n";
  } else {
    for (const State& s : fps) std::cout << s.to_string() << "\n";
  }
  return kOk;
}

int run_attractors(const Options& opt) {
  if (opt.format == Format::dot)
    throw std::invalid_argument("attractors has no dot output");
  BooleanNetwork f = load_model(opt.model_path);
  AttractorSet att = attractors(f, limits_of(opt));
  if (opt.format == Format::json_fmt) {
    json out = json::array();
    for (const Attractor& a : att.items) {
      json states = json::array();
      for (const State& s : a.states) states.push_back(s.to_string());
      out.push_back(json{{"states", states}, {"fixed_point", a.is_fixed_point()}});
    }
    std::cout << out.dump(2) << "\n";
  } else {
    for (const Attractor& a : att.items) {
      std::cout << (a.is_fixed_point() ? "fixed point:" : "cyclic:");
      for (const State& s : a.states) std::cout << " " << s.to_string();
      std::cout << "\n";
    }
  }
  return kOk;
}

int run_reprogram(const Options& opt) {
  BooleanNetwork f = load_model(opt.model_path);
  AnalysisLimits limits = limits_of(opt);

  if (opt.mode == "er" && opt.method == "vertex")
    throw std::invalid_argument(
        "--mode er cannot be combined with --method vertex: the recursive "
        "algorithm is defined for inevitable reachability only");
  if (opt.format == Format::dot)
    throw std::invalid_argument("reprogram has no dot output");

  State from = parse_state_argument(opt.from, f.dimension(), "--from");
  State to = parse_state_argument(opt.to, f.dimension(), "--to");

  AssumptionReport assumptions;
  if (opt.check_assumptions) {
    assumptions = check_assumptions(f, limits);
    if (!assumptions.all_fixed_points) {
      if (opt.format == Format::text)
        print_assumptions_text(assumptions, std::cerr);
      std::cerr << "error: cyclic attractor present: {" << assumptions.witness
                << "}\n";
      return kGuardViolation;
    }
  }

  ReprogrammingMode mode = opt.mode == "er" ? ReprogrammingMode::existential
                                            : ReprogrammingMode::inevitable;

  auto start_time = std::chrono::steady_clock::now();
  ReprogrammingSolution solution;
  if (opt.method == "oracle") {
    solution = reprogramming_oracle(f, from, to, mode, limits);
  } else if (opt.method == "vertex") {
    solution = ir_vertex_recursive(f, from, to, limits);
  } else if (mode == ReprogrammingMode::existential) {
    solution = er_scc_filter(f, from, to, limits);
  } else {
    solution = ir_scc_filter(f, from, to, limits);
  }
  auto elapsed = std::chrono::duration<double, std::milli>(
                     std::chrono::steady_clock::now() - start_time)
                     .count();

  std::vector<VertexSet> sets = solution.node_sets;
  if (opt.antichain) sets = minimal_antichain(sets);

  if (opt.format == Format::json_fmt) {
    json solutions = json::array();
    for (const VertexSet& s : sets) solutions.push_back(indices_1based(s));

    SccOrder order = scc_order(f, limits.cycle_budget);
    json structure = scc_structure_json(order);
    if (!solution.combinations.empty()) {
      json combos = json::array();
      for (const SccCombination& c : solution.combinations) {
        json one = json::array();
        for (const VertexSet& m : c.members) one.push_back(indices_1based(m));
        combos.push_back(one);
      }
      structure["combinations"] = combos;
    }

    json diagnostics{{"elapsed_ms", elapsed},
                     {"warnings", solution.warnings},
                     {"antichain", opt.antichain}};
    if (opt.method == "oracle") {
      json minimum = json::array();
      for (const VertexSet& s : minimum_cardinality(sets))
        minimum.push_back(indices_1based(s));
      diagnostics["minimum_cardinality_solutions"] = minimum;
    }
    if (opt.check_assumptions)
      diagnostics["assumptions"] = assumptions_json(assumptions);

    json out{{"model", json{{"n", f.dimension()}, {"nodes", f.names()}}},
             {"mode", opt.mode},
             {"method", opt.method},
             {"from", from.to_string()},
             {"to", to.to_string()},
             {"solutions", solutions},
             {"scc_structure", structure},
             {"diagnostics", diagnostics}};
    std::cout << out.dump(2) << "\n";
  } else {
    if (opt.check_assumptions) print_assumptions_text(assumptions, std::cout);
    std::cout << "n: " << f.dimension() << "\n";
    std::cout << "from: " << from.to_string() << "\n";
    std::cout << "to: " << to.to_string() << "\n";
    std::cout << "mode: "
              << (mode == ReprogrammingMode::existential ? "existential"
                                                         : "inevitable")
              << "\n";
    std::cout << "method: " << opt.method << "\n";
    std::cout << "solutions: " << sets.size() << "\n";
    for (std::size_t i = 0; i < sets.size(); ++i) {
      std::cout << "  " << name_set(sets[i], f);
      if (!opt.antichain && i < solution.combinations.size() &&
          solution.method == SolutionMethod::scc_filter) {
        std::cout << "  [sccs:";
        for (const VertexSet& m : solution.combinations[i].members)
          std::cout << " " << name_set(m, f);
        std::cout << "]";
      }
      std::cout << "\n";
    }
    if (opt.method == "oracle") {
      std::vector<VertexSet> minimum = minimum_cardinality(sets);
      std::cout << "minimum-cardinality solutions: " << minimum.size() << "\n";
      for (const VertexSet& s : minimum)
        std::cout << "  " << name_set(s, f) << "\n";
    }
    for (const std::string& w : solution.warnings)
      std::cout << "warning: " << w << "\n";
    std::cerr << "elapsed: " << elapsed << " ms\n";
  }
  return kOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Reprogramming determinants of Boolean networks"};
  app.set_version_flag("--version", "bnreprog 0.1.0");
  app.require_subcommand(1);
  app.fallthrough();

  Options opt;
  app.add_option("--max-n", opt.max_n,
                 "Dimension cap for explicit-state analyses");
  app.add_option("--cycle-budget", opt.cycle_budget,
                 "Enumeration budget for positive-cycle detection");

  std::map<std::string, Format> format_names{
      {"text", Format::text}, {"json", Format::json_fmt}, {"dot", Format::dot}};

  auto add_model = [&](CLI::App* cmd) {
    cmd->add_option("model", opt.model_path, "Network model file")->required();
  };
  std::map<const CLI::App*, CLI::Option*> format_options;
  auto add_format = [&](CLI::App* cmd) {
    format_options[cmd] =
        cmd->add_option("--format", opt.format, "Output format")
            ->transform(CLI::CheckedTransformer(format_names, CLI::ignore_case));
  };

  CLI::App* check = app.add_subcommand("check", "Validate a model file");
  add_model(check);
  check->add_flag("--check-assumptions", opt.check_assumptions,
                  "Also run the all-fixed-point guard and consistency report");
  add_format(check);

  CLI::App* ig = app.add_subcommand("ig", "Export the interaction graph");
  add_model(ig);
  add_format(ig);

  CLI::App* stg = app.add_subcommand("stg", "Export the transition graph");
  add_model(stg);
  add_format(stg);

  CLI::App* fps = app.add_subcommand("fixed-points", "Enumerate fixed points");
  add_model(fps);
  add_format(fps);

  CLI::App* atts = app.add_subcommand("attractors", "Enumerate attractors");
  add_model(atts);
  add_format(atts);

  CLI::App* reprog = app.add_subcommand(
      "reprogram", "Compute reprogramming determinants between fixed points");
  add_model(reprog);
  add_format(reprog);
  reprog->add_option("--from", opt.from, "Source fixed point")->required();
  reprog->add_option("--to", opt.to, "Target fixed point")->required();
  reprog->add_option("--mode", opt.mode, "er (existential) or ir (inevitable)")
      ->check(CLI::IsMember({"er", "ir"}));
  reprog->add_option("--method", opt.method, "scc, vertex, or oracle")
      ->check(CLI::IsMember({"scc", "vertex", "oracle"}));
  reprog->add_flag("--check-assumptions", opt.check_assumptions,
                   "Run the all-fixed-point guard before the analysis");
  reprog->add_flag("--antichain", opt.antichain,
                   "Reduce the result family to its inclusion-minimal members");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? kOk : kBadArguments;
  }

  // Default format: dot for the graph exports, text elsewhere.
  auto format_defaulted = [&](const CLI::App* cmd, Format preferred) {
    if (format_options[cmd]->count() == 0) opt.format = preferred;
  };

  try {
    if (check->parsed()) {
      format_defaulted(check, Format::text);
      return run_check(opt);
    }
    if (ig->parsed()) {
      format_defaulted(ig, Format::dot);
      return run_ig(opt);
    }
    if (stg->parsed()) {
      format_defaulted(stg, Format::dot);
      return run_stg(opt);
    }
    if (fps->parsed()) {
      format_defaulted(fps, Format::text);
      return run_fixed_points(opt);
    }
    if (atts->parsed()) {
      format_defaulted(atts, Format::text);
      return run_attractors(opt);
    }
    if (reprog->parsed()) {
      format_defaulted(reprog, Format::text);
      return run_reprogram(opt);
    }
  } catch (const ParseError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kParseError;
  } catch (const GuardViolation& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kGuardViolation;
  } catch (const CapExceeded& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kCapExceeded;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kBadArguments;
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return 1;
  }
  return kOk;
}
