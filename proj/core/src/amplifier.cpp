#include "qchaos/amplifier.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "qchaos/error.hpp"
#include "qchaos/extended_precision.hpp"

namespace qchaos::amplifier {

namespace {

bool in_unit_interval(double x) { return x >= 0.0 && x <= 1.0; }  // false for NaN

}  // namespace

LogisticParams::LogisticParams(double a, std::uint32_t max_steps) : a_(a), max_steps_(max_steps) {
  if (!(a >= 0.0 && a <= 4.0)) throw InputError("logistic rate a must lie in [0, 4]");
}

double logistic_step(double x, double a) {
  if (!in_unit_interval(x)) throw InputError("logistic map input must lie in [0, 1]");
  if (!(a >= 0.0 && a <= 4.0)) throw InputError("logistic rate a must lie in [0, 4]");
  // Evaluated as (a*x)*(1-x); with 1-x >= 1/2 this is never below (a/2)*x in
  // floating point either.
  return std::clamp(a * x * (1.0 - x), 0.0, 1.0);
}

AmplifierTrace iterate_map(double x0, const LogisticParams& params) {
  if (!in_unit_interval(x0)) throw InputError("x0 must lie in [0, 1]");
  AmplifierTrace trace;
  trace.x0 = x0;
  trace.samples.reserve(params.max_steps() + 1);
  double x = x0;
  for (std::uint32_t m = 0;; ++m) {
    trace.samples.push_back({m, x});
    if (!trace.first_crossing && x > kThreshold) trace.first_crossing = m;
    if (m == params.max_steps()) break;
    x = logistic_step(x, params.a());
  }
  return trace;
}

DensityTrace density_iterate(const qsim::QubitDensityMatrix& rho0, const LogisticParams& params) {
  if (!rho0.well_formed()) throw InputError("initial density matrix is not well formed");
  DensityTrace out{iterate_map(rho0.p1, params), {}};
  out.states.reserve(out.observable.samples.size());
  for (const auto& s : out.observable.samples) {
    out.states.push_back({(1.0 + s.value) / 2.0, (1.0 - s.value) / 2.0});
  }
  return out;
}

double expectation_sigma3(const qsim::QubitDensityMatrix& rho) { return rho.p0 - rho.p1; }

std::optional<std::uint32_t> find_first_crossing(double x0, const LogisticParams& params) {
  if (!in_unit_interval(x0)) throw InputError("x0 must lie in [0, 1]");
  double x = x0;
  for (std::uint32_t m = 0;; ++m) {
    if (x > kThreshold) return m;
    if (m == params.max_steps()) return std::nullopt;
    x = logistic_step(x, params.a());
  }
}

bool PropositionReport::all_pass() const noexcept {
  return std::all_of(rows.begin(), rows.end(), [](const PropositionRow& r) { return r.pass; });
}

PropositionReport verify_propositions(std::span<const std::uint32_t> n_range, std::uint64_t k,
                                      double a, const VerifyOptions& options) {
  if (!(a >= 0.0 && a <= 4.0)) throw InputError("logistic rate a must lie in [0, 4]");
  PropositionReport report;
  report.a = a;
  const bool applicable = (a == kPaperRate);
  const std::string a_decimal = extended::shortest_decimal(a);

  for (const std::uint32_t n : n_range) {
    PropositionRow row;
    row.n = n;
    row.k = k;
    row.upper_bound = 2 * n;
    row.bounds_applicable = applicable;
    row.x0 = std::ldexp(static_cast<double>(k), -static_cast<int>(n));

    if (n == 0 || k == 0 || !in_unit_interval(row.x0)) {
      row.note = "x0 = k/2^n must lie in (0, 1]";
      report.rows.push_back(std::move(row));
      continue;
    }
    if (n < 64 && static_cast<double>(k) != std::ldexp(row.x0, static_cast<int>(n))) {
      row.note = "k is not exactly representable";
      report.rows.push_back(std::move(row));
      continue;
    }

    const LogisticParams params(a, row.upper_bound);
    row.crossing = find_first_crossing(row.x0, params);
    const auto ext = extended::iterate_dyadic(k, n, a_decimal, row.upper_bound,
                                              options.precision_bits);
    row.crossing_extended = ext.first_crossing;

    if (row.crossing && row.crossing_extended) {
      const auto d = static_cast<long long>(*row.crossing) - *row.crossing_extended;
      row.extended_ok = d >= -1 && d <= 1;
      if (d != 0) row.note = "extended-precision crossing differs by " + std::to_string(d);
    } else {
      row.extended_ok = row.crossing.has_value() == row.crossing_extended.has_value();
    }

    if (!applicable) {
      row.upper_ok = row.lower_ok = true;
      row.pass = row.extended_ok;
      if (row.note.empty()) row.note = "bounds not applicable for this rate";
      report.rows.push_back(std::move(row));
      continue;
    }

    row.upper_ok = row.crossing.has_value() && *row.crossing <= row.upper_bound;
    if (k == 1) {
      row.lower_bound_paper = (n - 1.0) / kPaperLog2Rate;
      row.lower_bound_exact = (n - 1.0) / std::log2(kPaperRate);
      row.lower_ok = row.crossing.has_value() && *row.crossing > *row.lower_bound_paper &&
                     *row.crossing > *row.lower_bound_exact;
    } else {
      row.lower_ok = true;  // the lower bound is stated for x0 = 1/2^n only
    }
    row.pass = row.upper_ok && row.lower_ok && row.extended_ok;
    if (!row.crossing) row.note = "no crossing within 2n steps";
    report.rows.push_back(std::move(row));
  }
  return report;
}

}  // namespace qchaos::amplifier
