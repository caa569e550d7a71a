#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "qchaos/rational.hpp"

namespace qchaos::extended {

/// Logistic iteration in MPFR with a configurable mantissa. The rate is given
/// as a decimal string so 3.71 is represented to full working precision, not
/// via its nearest double.
struct ExtendedTrace {
  std::vector<double> values;  // each iterate rounded to nearest double
  std::optional<std::uint32_t> first_crossing;
};

ExtendedTrace iterate(const Rational& x0, std::string_view a_decimal, std::uint32_t max_steps,
                      unsigned precision_bits = 256);

/// x0 = k / 2^n, which needs no 64-bit denominator.
ExtendedTrace iterate_dyadic(std::uint64_t k, std::uint32_t n, std::string_view a_decimal,
                             std::uint32_t max_steps, unsigned precision_bits = 256);

/// Shortest decimal that round-trips to a.
std::string shortest_decimal(double a);

}  // namespace qchaos::extended
