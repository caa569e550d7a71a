#pragma once

// Subcommands of the qchaos tool. Each cmd_* writes to the given streams and
// returns the process exit code, so they can be driven in-process by tests.

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "qchaos/amplifier.hpp"
#include "qchaos/dimacs.hpp"
#include "qchaos/formula.hpp"

namespace qchaos::cli {

// MiniSAT convention.
inline constexpr int kExitOk = 0;
inline constexpr int kExitError = 1;
inline constexpr int kExitSat = 10;
inline constexpr int kExitUnsat = 20;

enum class Method { counting, statevector };

std::string to_string(Method m);
std::optional<Method> parse_method(std::string_view text);

enum class Decision { sat, unsat };

struct SolveOptions {
  double a = amplifier::kPaperRate;
  std::optional<std::uint32_t> max_steps;  // default 2n
  Method method = Method::counting;
  bool json = false;
};

struct SolveReport {
  std::string file;
  std::uint32_t n = 0;
  std::size_t m = 0;
  std::optional<std::uint64_t> r;
  Rational q_squared;
  double q_squared_float = 0.0;
  std::optional<std::uint32_t> first_crossing;
  Decision decision = Decision::unsat;
  Method method = Method::counting;
  double a = amplifier::kPaperRate;
  std::uint32_t max_steps = 0;
  std::int64_t wall_time_ms = 0;
};

/// q^2 by the chosen method, then the amplifier over max_steps; SAT exactly
/// when a crossing occurs. Throws ResourceError above the method's limit.
SolveReport solve(const ClauseSet& cs, const SolveOptions& options, std::string file = {});

std::string format_report(const SolveReport& report, bool json);

/// Reads a DIMACS file ("-" for stdin). Throws dimacs::ParseError or
/// std::runtime_error when the file cannot be opened.
dimacs::ParseResult read_formula(const std::string& path);

int cmd_solve(const std::string& path, const SolveOptions& options, std::ostream& out,
              std::ostream& err);

struct TraceOptions {
  std::optional<std::string> file;
  std::optional<double> q2;
  double a = amplifier::kPaperRate;
  std::optional<std::uint32_t> max_steps;  // required with q2, default 2n with a file
  Method method = Method::counting;
};

/// "m,M_m" header then one row per step, values with 17 significant digits.
std::string trace_csv(const amplifier::AmplifierTrace& trace);

/// Emits the CSV on out and "first_crossing=<m|none>" on err.
int cmd_trace(const TraceOptions& options, std::ostream& out, std::ostream& err);

struct OracleReport {
  std::uint32_t n = 0;
  std::size_t m = 0;
  std::uint64_t r = 0;
  Decision decision = Decision::unsat;
};

OracleReport oracle(const ClauseSet& cs);
int cmd_oracle(const std::string& path, bool json, std::ostream& out, std::ostream& err);

struct VerifyBoundsOptions {
  std::uint32_t n_min = 1;
  std::uint32_t n_max = 60;
  std::uint64_t k = 1;
  double a = amplifier::kPaperRate;
  unsigned precision_bits = 256;
  bool json = false;
};

std::string format_bounds_table(const amplifier::PropositionReport& report);
int cmd_verify_bounds(const VerifyBoundsOptions& options, std::ostream& out, std::ostream& err);

struct GenOptions {
  std::uint32_t n = 0;
  std::size_t m = 0;
  std::uint32_t k = 3;
  std::uint64_t seed = 0;
};

/// Uniform random k-CNF: each clause draws k distinct variables and a random
/// sign for each. Deterministic for a given seed. Throws InputError on bad
/// parameters.
ClauseSet generate_random_kcnf(const GenOptions& options);

int cmd_gen(const GenOptions& options, std::ostream& out, std::ostream& err);

}  // namespace qchaos::cli
