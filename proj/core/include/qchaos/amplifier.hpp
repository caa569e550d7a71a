#pragma once

// Logistic-map amplification of the one-qubit weight q^2, the sigma_3
// observable on the iterated density matrix, and the crossing-time checks.

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "qchaos/qsim.hpp"

namespace qchaos::amplifier {

/// Map rate used throughout the crossing-time bounds.
inline constexpr double kPaperRate = 3.71;
/// log2(3.71) as rounded in the bound derivation; the exact value is 1.89142.
inline constexpr double kPaperLog2Rate = 1.8912;
/// Strict threshold: a step counts as crossed only when M_m > 1/2.
inline constexpr double kThreshold = 0.5;

class LogisticParams {
 public:
  /// Throws InputError unless 0 <= a <= 4.
  LogisticParams(double a, std::uint32_t max_steps);

  /// Pipeline default: max_steps = 2n.
  static LogisticParams for_variables(std::uint32_t n, double a = kPaperRate) {
    return {a, 2 * n};
  }

  double a() const noexcept { return a_; }
  std::uint32_t max_steps() const noexcept { return max_steps_; }

 private:
  double a_;
  std::uint32_t max_steps_;
};

struct TraceSample {
  std::uint32_t m = 0;
  double value = 0.0;  // M_m = g^m(x0)
};

/// Samples m = 0..max_steps. Values past first_crossing are recorded for
/// plotting but are sensitive to rounding; only the prefix is meaningful
/// pointwise.
struct AmplifierTrace {
  double x0 = 0.0;
  std::vector<TraceSample> samples;
  std::optional<std::uint32_t> first_crossing;
};

/// a * x * (1 - x). Throws InputError for x outside [0, 1] or a outside [0, 4].
double logistic_step(double x, double a);

AmplifierTrace iterate_map(double x0, const LogisticParams& params);

struct DensityTrace {
  AmplifierTrace observable;
  std::vector<qsim::QubitDensityMatrix> states;  // rho_m = diag((1+M_m)/2, (1-M_m)/2)
};

/// Iterates the scalar p1 = q^2 of rho_0 and reports each step both as M_m
/// and as the diagonal state whose sigma_3 expectation is M_m.
DensityTrace density_iterate(const qsim::QubitDensityMatrix& rho0, const LogisticParams& params);

/// tr(rho sigma_3) with sigma_3 = diag(1, -1).
double expectation_sigma3(const qsim::QubitDensityMatrix& rho);

std::optional<std::uint32_t> find_first_crossing(double x0, const LogisticParams& params);

struct PropositionRow {
  std::uint32_t n = 0;
  std::uint64_t k = 1;
  double x0 = 0.0;
  std::optional<std::uint32_t> crossing;           // double precision
  std::optional<std::uint32_t> crossing_extended;  // MPFR oracle
  std::uint32_t upper_bound = 0;                   // 2n
  std::optional<double> lower_bound_paper;         // (n-1)/1.8912, k == 1 only
  std::optional<double> lower_bound_exact;         // (n-1)/log2(3.71), k == 1 only
  bool bounds_applicable = false;                  // a == 3.71
  bool upper_ok = false;
  bool lower_ok = false;
  bool extended_ok = false;  // oracle crossing within one step of the double one
  bool pass = false;
  std::string note;
};

struct PropositionReport {
  double a = kPaperRate;
  std::vector<PropositionRow> rows;

  bool all_pass() const noexcept;
};

struct VerifyOptions {
  unsigned precision_bits = 256;
};

/// For each n: x0 = k/2^n, crossing searched within 2n steps, then the upper
/// bound m* <= 2n and (for k = 1) the lower bound m* > (n-1)/log2(3.71) are
/// checked with both the rounded and the exact logarithm. For a != 3.71 the
/// bounds are marked not applicable and only crossings are reported.
/// Failures are recorded in the rows, never thrown.
PropositionReport verify_propositions(std::span<const std::uint32_t> n_range, std::uint64_t k,
                                      double a, const VerifyOptions& options = {});

}  // namespace qchaos::amplifier
