#include "qchaos/qsim.hpp"

#include <cmath>
#include <string>

#include "qchaos/error.hpp"

namespace qchaos::qsim {

namespace {

constexpr double kNormTolerance = 1e-12;

double squared_norm(std::span<const Amplitude> amps) {
  double sum = 0.0;
  for (const auto& a : amps) sum += std::norm(a);
  return sum;
}

}  // namespace

StateVector::StateVector(std::uint32_t n, std::vector<Amplitude> amplitudes)
    : n_(n), amplitudes_(std::move(amplitudes)) {
  if (n_ == 0 || n_ > 62) throw InputError("state vector needs 1..62 input qubits");
  if (amplitudes_.size() != (std::size_t{1} << (n_ + 1))) {
    throw InputError("state vector for n=" + std::to_string(n_) + " needs 2^" +
                     std::to_string(n_ + 1) + " amplitudes, got " +
                     std::to_string(amplitudes_.size()));
  }
  if (std::abs(norm() - 1.0) > kNormTolerance) throw InputError("state vector is not normalized");
}

double StateVector::norm() const { return std::sqrt(squared_norm(amplitudes_)); }

StateVector uniform_superposition(std::uint32_t n, std::uint32_t limit) {
  if (n > limit) throw ResourceError("uniform_superposition", n, limit);
  if (n == 0) throw InputError("uniform_superposition needs n >= 1");
  const std::size_t count = std::size_t{1} << n;
  const double amp = 1.0 / std::sqrt(static_cast<double>(count));
  std::vector<Amplitude> amps(count * 2, Amplitude{0.0, 0.0});
  for (std::uint64_t x = 0; x < count; ++x) amps[StateVector::index(x, 0)] = amp;
  return StateVector(n, std::move(amps));
}

StateVector apply_oracle(const StateVector& s, const BooleanFunction& f) {
  const auto src = s.amplitudes();
  std::vector<Amplitude> out(src.begin(), src.end());
  const std::uint64_t count = std::uint64_t{1} << s.num_inputs();
  for (std::uint64_t x = 0; x < count; ++x) {
    if (f(x)) std::swap(out[StateVector::index(x, 0)], out[StateVector::index(x, 1)]);
  }
  return StateVector(s.num_inputs(), std::move(out));
}

double measure_last_qubit_prob(const StateVector& s) {
  const auto amps = s.amplitudes();
  double p = 0.0;
  for (std::size_t i = 1; i < amps.size(); i += 2) p += std::norm(amps[i]);
  return std::min(1.0, std::max(0.0, p));
}

BooleanFunction oracle_for(const ClauseSet& cs) {
  return [packed = PackedFormula(cs)](std::uint64_t x) { return packed.satisfied_by(x); };
}

ReducedQubitState ReducedQubitState::from_rational(const Rational& q2) {
  if (q2.num() > q2.den()) throw InputError("q^2 must lie in [0, 1]");
  return {q2, q2.to_double()};
}

ReducedQubitState exact_q_squared(const ClauseSet& cs, const CountOptions& options) {
  const std::uint64_t r = count_roots(cs, options);
  return ReducedQubitState::from_rational(Rational::dyadic(r, cs.num_vars()));
}

bool QubitDensityMatrix::well_formed(double tol) const noexcept {
  return p0 >= 0.0 && p1 >= 0.0 && std::abs(p0 + p1 - 1.0) <= tol;
}

QubitDensityMatrix reduced_density(const ReducedQubitState& qs) {
  return {1.0 - qs.q_squared, qs.q_squared};
}

StateVectorOutcome run_statevector_pipeline(const ClauseSet& cs, std::uint32_t limit) {
  const auto psi = apply_oracle(uniform_superposition(cs.num_vars(), limit), oracle_for(cs));
  StateVectorOutcome out;
  out.probability = measure_last_qubit_prob(psi);
  out.roots = static_cast<std::uint64_t>(
      std::llround(std::ldexp(out.probability, static_cast<int>(cs.num_vars()))));
  out.q_squared_exact = Rational::dyadic(out.roots, cs.num_vars());
  return out;
}

}  // namespace qchaos::qsim
