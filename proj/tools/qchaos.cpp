// qchaos: quantum-chaos SAT pipeline driver.
//
//   qchaos solve <file.cnf> [--a 3.71] [--max-steps N] [--method counting|statevector] [--json]
//   qchaos trace (<file.cnf> | --q2 X --max-steps N) [--a 3.71]
//   qchaos oracle <file.cnf> [--json]
//   qchaos verify-bounds [--n-min 1] [--n-max 60] [--k 1] [--a 3.71]
//   qchaos gen --n N --m M [--k 3] [--seed S]
//
// Exit codes: 10 SAT, 20 UNSAT, 0 success for non-deciding commands, 1 error.

#include <iostream>

#include <CLI11.hpp>

#include "cli/commands.hpp"

namespace {

using namespace qchaos::cli;

void add_method_option(CLI::App* cmd, std::string& method) {
  cmd->add_option("--method", method, "q^2 computation: counting or statevector")
      ->check(CLI::IsMember({"counting", "statevector"}));
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Quantum-chaos SAT simulator: oracle step, logistic amplifier, crossing bounds"};
  app.require_subcommand(1);

  SolveOptions solve_opts;
  std::string solve_file;
  std::string solve_method = "counting";
  std::uint32_t solve_steps = 0;
  auto* solve = app.add_subcommand("solve", "Decide satisfiability through the amplifier");
  solve->add_option("file", solve_file, "DIMACS CNF file, '-' for stdin")->required();
  solve->add_option("--a", solve_opts.a, "Logistic rate")->check(CLI::Range(0.0, 4.0));
  auto* solve_steps_opt =
      solve->add_option("--max-steps", solve_steps, "Amplifier steps (default 2n)");
  add_method_option(solve, solve_method);
  solve->add_flag("--json", solve_opts.json, "Machine-readable report");

  TraceOptions trace_opts;
  std::string trace_file;
  double trace_q2 = 0.0;
  std::uint32_t trace_steps = 0;
  std::string trace_method = "counting";
  auto* trace = app.add_subcommand("trace", "Emit the amplifier trajectory as CSV");
  auto* trace_file_opt = trace->add_option("file", trace_file, "DIMACS CNF file");
  auto* trace_q2_opt =
      trace->add_option("--q2", trace_q2, "Initial value q^2")->check(CLI::Range(0.0, 1.0));
  trace->add_option("--a", trace_opts.a, "Logistic rate")->check(CLI::Range(0.0, 4.0));
  auto* trace_steps_opt = trace->add_option("--max-steps", trace_steps, "Steps to emit");
  add_method_option(trace, trace_method);

  std::string oracle_file;
  bool oracle_json = false;
  auto* oracle = app.add_subcommand("oracle", "Brute-force root count and decision");
  oracle->add_option("file", oracle_file, "DIMACS CNF file")->required();
  oracle->add_flag("--json", oracle_json, "Machine-readable report");

  VerifyBoundsOptions vb_opts;
  auto* vb = app.add_subcommand("verify-bounds", "Check the crossing-time bounds for x0 = k/2^n");
  vb->add_option("--n-min", vb_opts.n_min, "Smallest n")->check(CLI::PositiveNumber);
  vb->add_option("--n-max", vb_opts.n_max, "Largest n")->check(CLI::PositiveNumber);
  vb->add_option("--k", vb_opts.k, "Numerator of x0")->check(CLI::PositiveNumber);
  vb->add_option("--a", vb_opts.a, "Logistic rate")->check(CLI::Range(0.0, 4.0));
  vb->add_option("--precision", vb_opts.precision_bits, "MPFR mantissa bits for the oracle")
      ->check(CLI::Range(16U, 65536U));
  vb->add_flag("--json", vb_opts.json, "Machine-readable report");

  GenOptions gen_opts;
  auto* gen = app.add_subcommand("gen", "Generate a random k-CNF in DIMACS format");
  gen->add_option("--n", gen_opts.n, "Variables")->required()->check(CLI::PositiveNumber);
  gen->add_option("--m", gen_opts.m, "Clauses")->required();
  gen->add_option("--k", gen_opts.k, "Literals per clause")->check(CLI::PositiveNumber);
  gen->add_option("--seed", gen_opts.seed, "RNG seed");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitError;
  }

  if (*solve) {
    solve_opts.method = *parse_method(solve_method);
    if (*solve_steps_opt) solve_opts.max_steps = solve_steps;
    return cmd_solve(solve_file, solve_opts, std::cout, std::cerr);
  }
  if (*trace) {
    if (*trace_file_opt) trace_opts.file = trace_file;
    if (*trace_q2_opt) trace_opts.q2 = trace_q2;
    if (*trace_steps_opt) trace_opts.max_steps = trace_steps;
    trace_opts.method = *parse_method(trace_method);
    return cmd_trace(trace_opts, std::cout, std::cerr);
  }
  if (*oracle) return cmd_oracle(oracle_file, oracle_json, std::cout, std::cerr);
  if (*vb) return cmd_verify_bounds(vb_opts, std::cout, std::cerr);
  if (*gen) return cmd_gen(gen_opts, std::cout, std::cerr);
  return kExitError;
}
