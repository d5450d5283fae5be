// Command-line front end: compute | bounds | delta | ng | generate | certify.
// Reports go to stdout (or --output), diagnostics to stderr. Exit codes:
// 1 parse, 2 precondition, 3 numerical, 4 certification violation or
// replay mismatch.

#include <cmath>
#include <cstdint>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "cyclicity/certify.hpp"
#include "cyclicity/cyclicity.hpp"
#include "cyclicity/error.hpp"
#include "cyclicity/graph.hpp"
#include "cyclicity/resistance.hpp"

namespace {

using cyclicity::Error;
using cyclicity::ErrorCode;
using cyclicity::Graph;

// Values in this domain are rationals with small denominators whenever a
// closed form applies; show them as such. Smallest matching denominator
// wins, so the fraction is already reduced.
std::string format_value(double v) {
  if (std::isfinite(v)) {
    for (long long q = 1; q <= 1000; ++q) {
      double scaled = v * static_cast<double>(q);
      if (std::abs(scaled) > 9e15) break;
      long long p = std::llround(scaled);
      if (std::abs(v - static_cast<double>(p) / static_cast<double>(q)) <=
          1e-9 * std::max(1.0, std::abs(v))) {
        char buf[64];
        if (q == 1) {
          std::snprintf(buf, sizeof(buf), "%lld", p);
        } else {
          std::snprintf(buf, sizeof(buf), "%lld/%lld (%g)", p, q, v);
        }
        return buf;
      }
    }
  }
  char buf[32];
  std::snprintf(buf, sizeof(buf), "%.12g", v);
  return buf;
}

const char* yes_no(bool b) { return b ? "true" : "false"; }

std::string read_stream(std::istream& in) {
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

Graph load_graph(const std::string& input, const std::string& fixture) {
  if (!fixture.empty()) {
    if (!input.empty())
      throw Error(ErrorCode::InvalidParams, "give an input or a fixture, not both");
    if (fixture == "petersen") return cyclicity::petersen();
    throw Error(ErrorCode::InvalidParams, "unknown fixture: " + fixture);
  }
  if (input.empty())
    throw Error(ErrorCode::InvalidParams,
                "no input graph; pass a path, --input, or --fixture");
  if (input == "-") return cyclicity::parse_edge_list(read_stream(std::cin));
  std::ifstream file(input);
  if (!file) throw Error(ErrorCode::ParseError, "cannot open " + input);
  return cyclicity::parse_edge_list(read_stream(file));
}

void write_output(const std::string& text, const std::string& path) {
  if (path.empty()) {
    std::cout << text;
    return;
  }
  std::ofstream file(path, std::ios::binary);
  if (!file) throw Error(ErrorCode::ParseError, "cannot write " + path);
  file << text;
}

int parse_int(const std::string& token, const char* what) {
  size_t used = 0;
  int value = 0;
  try {
    value = std::stoi(token, &used);
  } catch (const std::exception&) {
    used = 0;
  }
  if (used != token.size())
    throw Error(ErrorCode::InvalidParams, std::string("bad ") + what + ": " + token);
  return value;
}

double parse_double(const std::string& token, const char* what) {
  size_t used = 0;
  double value = 0;
  try {
    value = std::stod(token, &used);
  } catch (const std::exception&) {
    used = 0;
  }
  if (used != token.size())
    throw Error(ErrorCode::InvalidParams, std::string("bad ") + what + ": " + token);
  return value;
}

// Shared per-subcommand state. A bare positional path is accepted as a
// convenience alias for --input.
struct CommonOpts {
  std::string input;
  std::string positional;
  std::string fixture;
  std::string output;
  std::string format = "human";
  double tolerance = 1e-9;

  std::string input_path() const {
    if (!input.empty() && !positional.empty())
      throw Error(ErrorCode::InvalidParams, "input given twice");
    return input.empty() ? positional : input;
  }
  cyclicity::Tolerances tolerances() const {
    if (tolerance <= 0) throw Error(ErrorCode::InvalidParams, "tolerance must be positive");
    return cyclicity::Tolerances{tolerance, 1e-7};
  }
  cyclicity::SolverConfig solver() const {
    cyclicity::SolverConfig config;
    config.tolerance = tolerance;
    return config;
  }
  bool structured() const { return format == "structured"; }
};

void add_common(CLI::App* sub, CommonOpts& opts, bool with_positional = true) {
  if (with_positional) sub->add_option("graph", opts.positional, "edge-list path or -");
  sub->add_option("-i,--input", opts.input, "edge-list path or - for stdin");
  sub->add_option("--fixture", opts.fixture, "built-in graph (petersen)");
  sub->add_option("-o,--output", opts.output, "write the report here instead of stdout");
  sub->add_option("--tolerance", opts.tolerance, "numeric tolerance")->capture_default_str();
  sub->add_option("--format", opts.format, "human or structured")
      ->check(CLI::IsMember({"human", "structured"}))
      ->capture_default_str();
}

std::string report_header(const cyclicity::CyclicityReport& report) {
  std::ostringstream out;
  out << "n: " << report.n << "\n";
  out << "m: " << report.m << "\n";
  out << "mu: " << report.mu << "\n";
  out << "cyclicity: " << format_value(report.cyclicity) << "\n";
  out << "foster_residual: " << format_value(report.foster_residual) << "\n";
  out << "is_tree: " << yes_no(report.flags.is_tree) << "\n";
  out << "is_complete: " << yes_no(report.flags.is_complete) << "\n";
  out << "is_electrically_edge_equivalent: "
      << yes_no(report.flags.is_electrically_edge_equivalent) << "\n";
  return out.str();
}

std::string bound_rows(const cyclicity::CyclicityReport& report) {
  std::ostringstream out;
  out << "bounds:\n";
  for (const auto& check : report.bounds) {
    out << "  " << check.name << ": "
        << (check.kind == cyclicity::BoundKind::Lower ? "lower" : "upper")
        << " bound=" << format_value(check.bound)
        << " actual=" << format_value(check.actual)
        << " slack=" << format_value(check.slack) << " holds=" << yes_no(check.holds)
        << " tight=" << yes_no(check.tight) << "\n";
  }
  return out.str();
}

int run_report(const CommonOpts& opts, bool with_bounds) {
  Graph g = load_graph(opts.input_path(), opts.fixture);
  cyclicity::CyclicityReport report = cyclicity::analyze(g, opts.tolerances(), opts.solver());
  std::string text;
  if (opts.structured()) {
    text = cyclicity::to_json(report).dump(2) + "\n";
  } else {
    text = report_header(report);
    if (with_bounds) text += bound_rows(report);
  }
  write_output(text, opts.output);
  return 0;
}

int run_delta(const CommonOpts& opts, const std::vector<std::string>& args) {
  std::string path = opts.input.empty() ? "" : opts.input;
  size_t first = 0;
  if (args.size() == 3) {
    if (!path.empty() || !opts.fixture.empty())
      throw Error(ErrorCode::InvalidParams, "input given twice");
    path = args[0];
    first = 1;
  } else if (args.size() != 2) {
    throw Error(ErrorCode::InvalidParams, "delta needs [input] i j");
  }
  int i = parse_int(args[first], "vertex");
  int j = parse_int(args[first + 1], "vertex");

  Graph g = load_graph(path, opts.fixture);
  cyclicity::ResistanceMatrix omega = cyclicity::resistance_matrix(g, opts.solver());
  cyclicity::DeltaReport report = cyclicity::edge_addition_delta(g, omega, i, j);
  cyclicity::Tolerances tol = opts.tolerances();

  std::string text;
  if (opts.structured()) {
    text = cyclicity::to_json(report, tol.tightness).dump(2) + "\n";
  } else {
    std::ostringstream out;
    out << "i: " << report.i << "\n";
    out << "j: " << report.j << "\n";
    out << "omega: " << format_value(report.omega_ij) << "\n";
    out << "delta: " << format_value(report.delta) << "\n";
    out << "lower: " << format_value(report.lower) << "\n";
    out << "upper: " << format_value(report.upper) << "\n";
    out << "upper_tight: " << yes_no(std::abs(report.upper - report.delta) <= tol.tightness)
        << "\n";
    text = out.str();
  }
  write_output(text, opts.output);
  return 0;
}

int run_ng(const CommonOpts& opts) {
  Graph g = load_graph(opts.input_path(), opts.fixture);
  cyclicity::NordhausGaddumRecord rec = cyclicity::nordhaus_gaddum(g, opts.tolerances());
  std::string text;
  if (opts.structured()) {
    nlohmann::ordered_json doc;
    doc["n"] = rec.n;
    doc["m"] = rec.m;
    doc["cyclicity"] = rec.c_g;
    doc["complement_cyclicity"] = rec.c_gbar;
    doc["sum"] = rec.sum;
    doc["product"] = rec.product;
    doc["sum_lower"] = rec.sum_lower;
    doc["sum_upper"] = rec.sum_upper;
    doc["product_upper"] = rec.product_upper;
    doc["sum_lower_tight"] = rec.sum_lower_tight;
    text = doc.dump(2) + "\n";
  } else {
    std::ostringstream out;
    out << "n: " << rec.n << "\n";
    out << "m: " << rec.m << "\n";
    out << "cyclicity: " << format_value(rec.c_g) << "\n";
    out << "complement_cyclicity: " << format_value(rec.c_gbar) << "\n";
    out << "sum: " << format_value(rec.sum) << "\n";
    out << "product: " << format_value(rec.product) << "\n";
    out << "sum_lower: " << format_value(rec.sum_lower) << "\n";
    out << "sum_upper_strict: " << format_value(rec.sum_upper) << "\n";
    out << "product_upper_strict: " << format_value(rec.product_upper) << "\n";
    out << "sum_lower_tight: " << yes_no(rec.sum_lower_tight) << "\n";
    text = out.str();
  }
  write_output(text, opts.output);
  return 0;
}

int run_generate(const std::vector<std::string>& args, std::uint64_t seed,
                 const std::string& output) {
  if (args.empty()) throw Error(ErrorCode::InvalidParams, "generate needs a family name");
  const std::string& family = args[0];
  std::vector<std::string> params(args.begin() + 1, args.end());
  auto want = [&](size_t count) {
    if (params.size() != count)
      throw Error(ErrorCode::InvalidParams,
                  family + " takes " + std::to_string(count) + " parameter(s)");
  };
  Graph g = cyclicity::petersen();
  if (family == "path") {
    want(1);
    g = cyclicity::path(parse_int(params[0], "n"));
  } else if (family == "cycle") {
    want(1);
    g = cyclicity::cycle(parse_int(params[0], "n"));
  } else if (family == "complete") {
    want(1);
    g = cyclicity::complete(parse_int(params[0], "n"));
  } else if (family == "complete_bipartite") {
    want(2);
    g = cyclicity::complete_bipartite(parse_int(params[0], "n1"), parse_int(params[1], "n2"));
  } else if (family == "circulant") {
    if (params.size() < 2)
      throw Error(ErrorCode::InvalidParams, "circulant takes n and at least one jump");
    int n = parse_int(params[0], "n");
    std::vector<int> jumps;
    for (size_t k = 1; k < params.size(); ++k) jumps.push_back(parse_int(params[k], "jump"));
    g = cyclicity::circulant(n, jumps);
  } else if (family == "paley") {
    want(1);
    g = cyclicity::paley(parse_int(params[0], "q"));
  } else if (family == "petersen") {
    want(0);
  } else if (family == "random") {
    want(2);
    g = cyclicity::random_connected(parse_int(params[0], "n"),
                                    parse_double(params[1], "edge probability"), seed);
  } else {
    throw Error(ErrorCode::InvalidParams, "unknown family: " + family);
  }
  write_output(cyclicity::to_edge_list(g), output);
  return 0;
}

struct CertifyOpts {
  int exhaustive_n = 0;
  bool sampled = false;
  std::string replay_path;
  std::vector<int> sizes{10, 13, 16};
  int samples = 100;
  double edge_probability = 0.35;
  std::uint64_t seed = 1;
  double tolerance = 1e-9;
  std::string output;
};

int run_certify(const CertifyOpts& opts) {
  int modes = (opts.exhaustive_n > 0 ? 1 : 0) + (opts.sampled ? 1 : 0) +
              (opts.replay_path.empty() ? 0 : 1);
  if (modes != 1)
    throw Error(ErrorCode::InvalidParams,
                "pick exactly one of --exhaustive, --sampled, --replay");
  if (opts.tolerance <= 0)
    throw Error(ErrorCode::InvalidParams, "tolerance must be positive");

  if (!opts.replay_path.empty()) {
    std::ifstream file(opts.replay_path);
    if (!file) throw Error(ErrorCode::ParseError, "cannot open " + opts.replay_path);
    cyclicity::CertificationRun run = cyclicity::parse_certrun(read_stream(file));
    bool ok = cyclicity::replay(run);
    std::cout << "replay: " << (ok ? "ok" : "mismatch")
              << " (graphs_checked: " << run.graphs_checked << ")\n";
    return ok ? 0 : 4;
  }

  cyclicity::Tolerances tol{opts.tolerance, 1e-7};
  cyclicity::CertificationRun run;
  std::string path = opts.output;
  if (opts.exhaustive_n > 0) {
    run = cyclicity::certify_exhaustive(opts.exhaustive_n, tol);
    if (path.empty()) path = "exhaustive-" + std::to_string(opts.exhaustive_n) + ".certrun";
  } else {
    run = cyclicity::certify_sampled(opts.sizes, opts.samples, opts.edge_probability,
                                     opts.seed, tol);
    if (path.empty()) path = "sampled-" + std::to_string(opts.seed) + ".certrun";
  }
  write_output(cyclicity::to_certrun(run), path);
  std::cout << "mode: " << run.mode << "\n";
  std::cout << "graphs_checked: " << run.graphs_checked << "\n";
  std::cout << "checks_performed: " << run.checks_performed << "\n";
  std::cout << "ng_checked: " << run.ng_checked << "\n";
  std::cout << "violations: " << run.violations.size() << "\n";
  std::cout << "wrote: " << path << "\n";
  return run.violations.empty() ? 0 : 4;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"resistance distance and global cyclicity toolkit"};
  app.require_subcommand(1);

  CommonOpts compute_opts;
  CLI::App* compute = app.add_subcommand("compute", "cyclicity, flags, Foster residual");
  add_common(compute, compute_opts);

  CommonOpts bounds_opts;
  CLI::App* bounds = app.add_subcommand("bounds", "compute plus every applicable bound row");
  add_common(bounds, bounds_opts);

  CommonOpts delta_opts;
  std::vector<std::string> delta_args;
  CLI::App* delta = app.add_subcommand("delta", "effect of adding the edge {i, j}");
  delta->add_option("args", delta_args, "[input] i j");
  add_common(delta, delta_opts, false);

  CommonOpts ng_opts;
  CLI::App* ng = app.add_subcommand("ng", "complement-pair cyclicity record");
  add_common(ng, ng_opts);

  std::vector<std::string> generate_args;
  std::string generate_output;
  std::uint64_t generate_seed = 0;
  CLI::App* generate = app.add_subcommand(
      "generate",
      "emit an edge list: path|cycle|complete|complete_bipartite|circulant|paley|petersen|random");
  generate->add_option("family", generate_args, "family name then parameters");
  generate->add_option("-o,--output", generate_output, "write here instead of stdout");
  generate->add_option("--seed", generate_seed, "seed for random")->capture_default_str();

  CertifyOpts certify_opts;
  CLI::App* certify = app.add_subcommand("certify", "run or replay a check battery");
  certify->add_option("--exhaustive", certify_opts.exhaustive_n,
                      "every connected graph on 3..N vertices (N <= 7)");
  certify->add_flag("--sampled", certify_opts.sampled, "random graphs at --sizes");
  certify->add_option("--replay", certify_opts.replay_path, "re-derive a stored run");
  certify->add_option("--sizes", certify_opts.sizes, "vertex counts for --sampled")
      ->delimiter(',')
      ->capture_default_str();
  certify->add_option("--samples", certify_opts.samples, "graphs per size")
      ->capture_default_str();
  certify->add_option("--edge-probability", certify_opts.edge_probability,
                      "sampling density")
      ->capture_default_str();
  certify->add_option("--seed", certify_opts.seed, "sampling seed")->capture_default_str();
  certify->add_option("--tolerance", certify_opts.tolerance, "numeric tolerance")
      ->capture_default_str();
  certify->add_option("-o,--output", certify_opts.output, "run file path");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : 1;
  }

  try {
    if (compute->parsed()) return run_report(compute_opts, false);
    if (bounds->parsed()) return run_report(bounds_opts, true);
    if (delta->parsed()) return run_delta(delta_opts, delta_args);
    if (ng->parsed()) return run_ng(ng_opts);
    if (generate->parsed()) return run_generate(generate_args, generate_seed, generate_output);
    if (certify->parsed()) return run_certify(certify_opts);
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return static_cast<int>(e.category());
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 3;
  }
  return 0;
}
