#pragma once

#include <compare>
#include <cstdint>
#include <string>

namespace qchaos {

/// Non-negative rational number with 64-bit numerator and denominator, kept
/// in lowest terms. Large enough for every r/2^n the counting path produces
/// (n <= 62).
class Rational {
 public:
  constexpr Rational() = default;
  Rational(std::uint64_t num, std::uint64_t den);

  /// r / 2^exponent, reduced.
  static Rational dyadic(std::uint64_t r, unsigned exponent);

  std::uint64_t num() const noexcept { return num_; }
  std::uint64_t den() const noexcept { return den_; }

  double to_double() const noexcept;
  std::string to_string() const;  // "1/8", "0", "1"

  friend bool operator==(const Rational&, const Rational&) = default;
  friend std::strong_ordering operator<=>(const Rational& lhs, const Rational& rhs);

 private:
  std::uint64_t num_ = 0;
  std::uint64_t den_ = 1;
};

}  // namespace qchaos
