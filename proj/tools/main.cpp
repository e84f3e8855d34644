// qbf-redux: QDIMACS preprocessing by QRAT/QRAT+ redundancy elimination,
// formula family generation, and a brute-force oracle for small inputs.

#include <chrono>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "qbfredux/generators.hpp"
#include "qbfredux/oracle.hpp"
#include "qbfredux/qdimacs.hpp"
#include "qbfredux/redundancy.hpp"
#include "qbfredux/trace.hpp"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitUsage = 1;
constexpr int kExitResource = 2;

qbfredux::ParseResult parse_input(const std::string& path) {
  if (path.empty() || path == "-") return qbfredux::parse_qdimacs(std::cin);
  std::ifstream in(path);
  if (!in) throw qbfredux::ResourceLimitError("cannot open input file " + path);
  return qbfredux::parse_qdimacs(in);
}

void write_output(const std::string& path, const std::string& text) {
  if (path.empty() || path == "-") {
    std::cout << text;
    return;
  }
  std::ofstream out(path);
  if (!out) throw qbfredux::ResourceLimitError("cannot open output file " + path);
  out << text;
}

void report_warnings(const qbfredux::ParseDiagnostics& diagnostics) {
  for (const auto& [line, message] : diagnostics.warnings) {
    std::cerr << "c warning";
    if (line != 0) std::cerr << " (line " << line << ")";
    std::cerr << ": " << message << '\n';
  }
}

struct PreprocessOptions {
  std::string input;
  std::string output;
  std::string trace_path;
  std::string mode = "qratplus";
  bool no_qrate = false;
  bool no_qratu = false;
  bool ur = false;
  bool stats = false;
  double timeout_soft = 0;
  std::uint32_t max_rounds = 0;
};

int run_preprocess(const PreprocessOptions& options) {
  qbfredux::PreprocessConfig config;
  config.mode = options.mode == "qrat" ? qbfredux::Mode::Qrat
                                       : qbfredux::Mode::QratPlus;
  config.enable_qrate = !options.no_qrate;
  config.enable_qratu = !options.no_qratu;
  config.enable_ur_pass = options.ur;
  config.soft_timeout_seconds = options.timeout_soft;
  config.max_rounds = options.max_rounds;

  const auto started = std::chrono::steady_clock::now();
  qbfredux::ParseResult parsed = parse_input(options.input);
  report_warnings(parsed.diagnostics);
  qbfredux::PreprocessResult result = qbfredux::preprocess(parsed.formula, config);
  const std::chrono::duration<double> elapsed =
      std::chrono::steady_clock::now() - started;

  write_output(options.output, qbfredux::write_qdimacs(result.formula));
  if (!options.trace_path.empty())
    write_output(options.trace_path, qbfredux::write_trace(result.trace));
  if (options.stats) {
    const auto& stats = result.stats;
    std::cerr << "c mode " << (config.mode == qbfredux::Mode::Qrat ? "qrat" : "qratplus") << '\n'
              << "c rounds " << stats.rounds << '\n'
              << "c clauses-deleted " << stats.clauses_deleted << '\n'
              << "c universal-literals-deleted " << stats.universal_literals_deleted << '\n'
              << "c redundancy-checks " << stats.redundancy_checks << '\n'
              << "c propagation-calls " << stats.propagation_calls << '\n'
              << "c timed-out " << (stats.timed_out ? 1 : 0) << '\n'
              << "c empty-clause " << (stats.empty_clause ? 1 : 0) << '\n'
              << "c time-seconds " << elapsed.count() << '\n';
  }
  return kExitOk;
}

struct GenOptions {
  std::string family;
  std::uint32_t n = 1;
  std::string output;
  qbfredux::RandomQbfConfig random;
  std::uint32_t width = 3;
};

int run_gen(const GenOptions& options) {
  qbfredux::Formula formula;
  if (options.family == "phi-c") {
    formula = qbfredux::gen_phi_c(options.n);
  } else if (options.family == "phi-l") {
    formula = qbfredux::gen_phi_l(options.n);
  } else if (options.family == "quparity") {
    formula = qbfredux::gen_quparity(options.n);
  } else if (options.family == "lqparity") {
    formula = qbfredux::gen_lqparity(options.n);
  } else {  // random
    qbfredux::RandomQbfConfig config = options.random;
    config.width_min = 1;
    config.width_max = options.width;
    formula = qbfredux::gen_random_qbf(config);
  }
  write_output(options.output, qbfredux::write_qdimacs(formula));
  return kExitOk;
}

struct SolveOptions {
  std::string input;
  std::string output;
  std::size_t max_vars = qbfredux::kDefaultVariableCap;
};

int run_solve(const SolveOptions& options) {
  qbfredux::ParseResult parsed = parse_input(options.input);
  report_warnings(parsed.diagnostics);
  const qbfredux::Verdict verdict =
      qbfredux::evaluate(parsed.formula, options.max_vars);
  write_output(options.output,
               verdict == qbfredux::Verdict::Sat ? "s cnf 1\n" : "s cnf 0\n");
  return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"QBF preprocessor: QRAT/QRAT+ redundancy elimination"};
  app.require_subcommand(1);

  PreprocessOptions preprocess_options;
  CLI::App* preprocess = app.add_subcommand(
      "preprocess", "Remove redundant clauses and universal literals");
  preprocess->add_option("input", preprocess_options.input,
                         "QDIMACS file (default: standard input)");
  preprocess->add_option("--mode", preprocess_options.mode, "Redundancy property")
      ->check(CLI::IsMember({"qrat", "qratplus"}))
      ->default_str("qratplus");
  preprocess->add_flag("--no-qrate", preprocess_options.no_qrate,
                       "Disable clause elimination");
  preprocess->add_flag("--no-qratu", preprocess_options.no_qratu,
                       "Disable universal literal elimination");
  preprocess->add_flag("--ur", preprocess_options.ur,
                       "Apply universal reduction each round");
  preprocess->add_option("--timeout-soft", preprocess_options.timeout_soft,
                         "Soft wall clock limit in seconds (0 = unlimited)");
  preprocess->add_option("--max-rounds", preprocess_options.max_rounds,
                         "Round limit (0 = until fixed point)");
  preprocess->add_option("--trace", preprocess_options.trace_path,
                         "Write the elimination trace to this file");
  preprocess->add_flag("--stats", preprocess_options.stats,
                       "Print statistics to standard error");
  preprocess->add_option("--out", preprocess_options.output,
                         "Output file (default: standard output)");

  GenOptions gen_options;
  CLI::App* gen = app.add_subcommand("gen", "Emit a formula family as QDIMACS");
  gen->add_option("family", gen_options.family, "Family")
      ->required()
      ->check(CLI::IsMember({"phi-c", "phi-l", "quparity", "lqparity", "random"}));
  gen->add_option("n", gen_options.n, "Family size parameter");
  gen->add_option("--vars", gen_options.random.num_vars, "Random: variable count");
  gen->add_option("--blocks", gen_options.random.num_blocks, "Random: block count");
  gen->add_option("--clauses", gen_options.random.num_clauses, "Random: clause count");
  gen->add_option("--width", gen_options.width,
                  "Random: maximum clause width (widths sampled from 1..W)");
  gen->add_option("--seed", gen_options.random.seed, "Random: seed");
  gen->add_option("--out", gen_options.output, "Output file");

  SolveOptions solve_options;
  CLI::App* solve = app.add_subcommand("solve", "Evaluate with the brute-force oracle");
  solve->add_option("input", solve_options.input, "QDIMACS file");
  solve->add_option("--max-vars", solve_options.max_vars,
                    "Variable cap for the oracle");
  solve->add_option("--out", solve_options.output, "Output file");

  // Bare invocations default to preprocessing.
  std::vector<std::string> args(argv + 1, argv + argc);
  if (!args.empty()) {
    const std::string& first = args.front();
    const bool known = first == "preprocess" || first == "gen" || first == "solve" ||
                       first == "-h" || first == "--help" || first == "--version";
    if (!known) args.insert(args.begin(), "preprocess");
  }
  std::reverse(args.begin(), args.end());

  try {
    app.parse(args);
  } catch (const CLI::ParseError& e) {
    return app.exit(e) == 0 ? kExitOk : kExitUsage;
  }

  try {
    if (preprocess->parsed()) return run_preprocess(preprocess_options);
    if (gen->parsed()) return run_gen(gen_options);
    if (solve->parsed()) return run_solve(solve_options);
    std::cerr << app.help();
    return kExitUsage;
  } catch (const qbfredux::ResourceLimitError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitResource;
  } catch (const qbfredux::ParseError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const qbfredux::Error& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitUsage;
  }
}
