#pragma once

// Dense state-vector simulation of the oracle step on n input qubits plus one
// output qubit, and the one-qubit reduced state that feeds the amplifier.
//
// Basis index convention: index = (x as an n-bit integer, x_1 most
// significant) * 2 + y, so the output qubit y is the least significant bit.

#include <complex>
#include <cstdint>
#include <functional>
#include <span>
#include <vector>

#include "qchaos/formula.hpp"
#include "qchaos/rational.hpp"

namespace qchaos::qsim {

using Amplitude = std::complex<double>;

inline constexpr std::uint32_t kDefaultStateVectorLimit = 20;

/// Predicate on packed n-bit assignments (see Assignment::from_bits).
using BooleanFunction = std::function<bool(std::uint64_t)>;

class StateVector {
 public:
  /// Takes ownership of 2^(n+1) amplitudes. Throws InputError on a size
  /// mismatch or when the norm differs from 1 by more than 1e-12.
  StateVector(std::uint32_t n, std::vector<Amplitude> amplitudes);

  std::uint32_t num_inputs() const noexcept { return n_; }
  std::size_t dimension() const noexcept { return amplitudes_.size(); }
  std::span<const Amplitude> amplitudes() const noexcept { return amplitudes_; }

  Amplitude amplitude(std::uint64_t x, int y) const { return amplitudes_.at(index(x, y)); }
  double norm() const;

  static std::size_t index(std::uint64_t x, int y) noexcept {
    return static_cast<std::size_t>((x << 1) | static_cast<std::uint64_t>(y & 1));
  }

 private:
  std::uint32_t n_;
  std::vector<Amplitude> amplitudes_;
};

/// (1/sqrt(2^n)) sum_x |x, 0>. Throws ResourceError when n > limit.
StateVector uniform_superposition(std::uint32_t n,
                                  std::uint32_t limit = kDefaultStateVectorLimit);

/// |x, y> -> |x, y XOR f(x)>; swaps the (x,0) and (x,1) amplitudes wherever
/// f(x) = 1.
StateVector apply_oracle(const StateVector& s, const BooleanFunction& f);

/// ||(I (x) |1><1|) s||^2, summed in index order.
double measure_last_qubit_prob(const StateVector& s);

/// The formula's satisfaction predicate on packed assignments.
BooleanFunction oracle_for(const ClauseSet& cs);

/// Weight q^2 = r/2^n of the |1> branch of sqrt(1-q^2)|0> + q|1>.
struct ReducedQubitState {
  Rational q_squared_exact;
  double q_squared = 0.0;

  static ReducedQubitState from_rational(const Rational& q2);
};

/// Counting path: r from count_roots, q^2 = r/2^n exactly.
ReducedQubitState exact_q_squared(const ClauseSet& cs, const CountOptions& options = {});

/// Diagonal of a one-qubit density matrix in the {|0>, |1>} basis.
struct QubitDensityMatrix {
  double p0 = 1.0;
  double p1 = 0.0;

  bool well_formed(double tol = 1e-12) const noexcept;
};

/// rho = q^2 P_1 + (1 - q^2) P_0.
QubitDensityMatrix reduced_density(const ReducedQubitState& qs);

/// Result of the state-vector path: the measured probability, and the
/// rational r/2^n recovered by rounding probability * 2^n.
struct StateVectorOutcome {
  double probability = 0.0;
  std::uint64_t roots = 0;
  Rational q_squared_exact;
};

/// uniform_superposition -> apply_oracle -> measure_last_qubit_prob.
StateVectorOutcome run_statevector_pipeline(const ClauseSet& cs,
                                            std::uint32_t limit = kDefaultStateVectorLimit);

}  // namespace qchaos::qsim
