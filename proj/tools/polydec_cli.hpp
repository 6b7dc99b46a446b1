// Command-line front end: compute, decompose, validate.
#pragma once

#include <chrono>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "polydec/polydec.hpp"

namespace polydec::cli {

enum ExitCode : int {
  ok = 0,
  failure = 1,  // usage errors, oracle budget, internal errors
  parse_failure = 2,
  invalid_order = 3,
  verify_mismatch = 4,
};

enum class OutputMode { text, json, latex };

struct RunConfig {
  std::string graph_path;
  std::string format = "edge-list";
  std::string polynomial = "independence";
  std::string order_path;
  bool trace = false;
  bool verify = false;
  std::string output = "text";
  std::uint64_t seed = 0;
  std::size_t max_verify_vertices = OracleBudget{}.max_vertices;
};

/// Input problem that maps to exit code 2.
struct InputError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// Order problem that maps to exit code 3.
struct OrderRejected : std::runtime_error {
  Violation violation;
  explicit OrderRejected(Violation v) : std::runtime_error(v.message), violation(std::move(v)) {}
};

inline std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw InputError("cannot read '" + path + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

inline Graph load_graph(const RunConfig& cfg) {
  std::string text = read_file(cfg.graph_path);
  try {
    return parse_graph(text, parse_format_name(cfg.format));
  } catch (const ParseError& e) {
    throw InputError(cfg.graph_path + ":" + std::to_string(e.line()) + ": " + e.what());
  } catch (const std::exception& e) {
    throw InputError(cfg.graph_path + ": " + e.what());
  }
}

inline OrderFile load_order(const std::string& path) {
  std::string text = read_file(path);
  try {
    return parse_order_file(text);
  } catch (const ParseError& e) {
    throw InputError(path + ":" + std::to_string(e.line()) + ": " + e.what());
  } catch (const std::exception& e) {
    throw InputError(path + ": " + e.what());
  }
}

/// One line: `invalid property=<p> witness=<a,b,...> message="<text>"`.
inline std::string format_violation(const Violation& v) {
  std::string w;
  for (std::size_t i = 0; i < v.witness.size(); ++i) {
    if (i) w += ',';
    w += std::to_string(v.witness[i]);
  }
  return "invalid property=" + v.property + " witness=" + w + " message=\"" + v.message + "\"";
}

/// The composition order to run: the file's (validated) or the heuristic one.
inline CompositionOrder resolve_order(const Graph& g, const std::string& order_path) {
  if (order_path.empty()) return default_composition_order(g);
  OrderFile f = load_order(order_path);
  switch (f.kind) {
    case OrderFile::Kind::composition:
      if (auto bad = validate_composition_order(g, f.composition)) throw OrderRejected(*bad);
      return f.composition;
    case OrderFile::Kind::ordering:
      if (auto bad = validate_ordering(g, f.ordering)) throw OrderRejected(*bad);
      return compose_order(g, nice_path_from_ordering(g, f.ordering));
    case OrderFile::Kind::bags:
      if (auto bad = validate_path_decomposition(g, f.bags)) throw OrderRejected(*bad);
      return compose_order(g, nice_path_from_bags(g, f.bags));
  }
  throw std::logic_error("unhandled order file kind");
}

inline OutputMode parse_output(const std::string& s) {
  if (s == "text") return OutputMode::text;
  if (s == "json") return OutputMode::json;
  if (s == "latex") return OutputMode::latex;
  throw std::invalid_argument("unknown output mode '" + s + "'");
}

inline std::string render(const Polynomial& p, OutputMode mode) {
  return mode == OutputMode::latex ? to_latex(p) : to_text(p);
}

inline int cmd_compute(const RunConfig& cfg, std::ostream& out, std::ostream& err) {
  PolynomialKind kind = parse_polynomial_kind(cfg.polynomial);
  OutputMode mode = parse_output(cfg.output);
  Graph g = load_graph(cfg);
  CompositionOrder co = resolve_order(g, cfg.order_path);

  RunOptions opts;
  opts.trace = cfg.trace;
  opts.shuffle_seed = cfg.seed;
  opts.prevalidated = true;
  RunResult res = compute(kind, co, opts);

  if (cfg.verify) {
    OracleBudget budget;
    budget.max_vertices = cfg.max_verify_vertices;
    Polynomial expected = oracle(kind, g, budget);
    if (expected != res.value) {
      err << "verify mismatch for " << name_of(kind) << "\n"
          << "engine: " << to_text(res.value) << "\n"
          << "oracle: " << to_text(expected) << "\n";
      return verify_mismatch;
    }
  }

  if (mode == OutputMode::json) {
    nlohmann::json j{{"polynomial", std::string(name_of(kind))}, {"value", to_json(res.value)}};
    if (res.trace) j["trace"] = trace_to_json(*res.trace);
    out << j.dump() << "\n";
    return ok;
  }
  out << render(res.value, mode) << "\n";
  if (res.trace) out << trace_to_text(*res.trace);
  return ok;
}

inline int cmd_decompose(const RunConfig& cfg, std::ostream& out, std::ostream&) {
  OutputMode mode = parse_output(cfg.output);
  Graph g = load_graph(cfg);
  CompositionOrder co = default_composition_order(g);
  int w = composition_width(co);
  if (mode == OutputMode::json) {
    nlohmann::json items = nlohmann::json::array();
    for (const auto& item : co.items) items.push_back(to_string(item));
    out << nlohmann::json{{"order", items}, {"width", w}}.dump() << "\n";
    return ok;
  }
  out << serialize_composition_order(co) << "# width " << w << "\n";
  return ok;
}

inline int cmd_validate(const RunConfig& cfg, std::ostream& out, std::ostream&) {
  OutputMode mode = parse_output(cfg.output);
  Graph g = load_graph(cfg);
  OrderFile f = load_order(cfg.order_path);
  ValidationResult bad;
  switch (f.kind) {
    case OrderFile::Kind::composition: bad = validate_composition_order(g, f.composition); break;
    case OrderFile::Kind::ordering: bad = validate_ordering(g, f.ordering); break;
    case OrderFile::Kind::bags: bad = validate_path_decomposition(g, f.bags); break;
  }
  if (mode == OutputMode::json) {
    nlohmann::json j = bad ? nlohmann::json{{"valid", false}, {"violation", to_json(*bad)}}
                           : nlohmann::json{{"valid", true}};
    out << j.dump() << "\n";
  } else {
    out << (bad ? format_violation(*bad) : std::string("valid")) << "\n";
  }
  return bad ? invalid_order : ok;
}

/// Default for --seed: POLYDEC_SEED when set and numeric, else 0.
inline std::uint64_t seed_from_env() {
  const char* s = std::getenv("POLYDEC_SEED");
  if (!s || !*s) return 0;
  try {
    return std::stoull(s);
  } catch (const std::exception&) {
    return 0;
  }
}

/// Entry point; `args` excludes the program name.
inline int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Graph polynomials by composition-order sweeps", "polydec"};
  app.require_subcommand(1);
  RunConfig cfg;
  cfg.seed = seed_from_env();

  auto add_graph = [&](CLI::App* sub) {
    sub->add_option("--graph", cfg.graph_path, "graph file")->required();
    sub->add_option("--format", cfg.format, "edge-list or dimacs")
        ->check(CLI::IsMember({"edge-list", "dimacs"}));
    sub->add_option("--output", cfg.output, "text, json or latex")
        ->check(CLI::IsMember({"text", "json", "latex"}));
  };

  CLI::App* compute_cmd = app.add_subcommand("compute", "compute a graph polynomial");
  add_graph(compute_cmd);
  compute_cmd->add_option("--poly", cfg.polynomial, "independence, chromatic, domination, bipartition")
      ->check(CLI::IsMember({"independence", "chromatic", "domination", "bipartition"}));
  compute_cmd->add_option("--order", cfg.order_path,
                          "composition order, vertex ordering or bag file");
  compute_cmd->add_flag("--trace", cfg.trace, "print the state table after each item");
  compute_cmd->add_flag("--verify", cfg.verify, "compare against brute force");
  compute_cmd->add_option("--seed", cfg.seed, "state visiting seed (default $POLYDEC_SEED or 0)");
  compute_cmd->add_option("--max-verify-vertices", cfg.max_verify_vertices,
                          "largest graph --verify will brute-force");

  CLI::App* decompose_cmd = app.add_subcommand("decompose", "print a heuristic composition order");
  add_graph(decompose_cmd);

  CLI::App* validate_cmd = app.add_subcommand("validate", "check an order file against a graph");
  add_graph(validate_cmd);
  validate_cmd->add_option("--order", cfg.order_path, "order file")->required();

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return ok;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return ok;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n";
    return parse_failure;
  }

  try {
    if (*compute_cmd) return cmd_compute(cfg, out, err);
    if (*decompose_cmd) return cmd_decompose(cfg, out, err);
    return cmd_validate(cfg, out, err);
  } catch (const InputError& e) {
    err << "error: " << e.what() << "\n";
    return parse_failure;
  } catch (const OrderRejected& e) {
    err << format_violation(e.violation) << "\n";
    return invalid_order;
  } catch (const BudgetExceeded& e) {
    err << "error: " << e.what() << "\n";
    return failure;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return failure;
  }
}

}  // namespace polydec::cli
