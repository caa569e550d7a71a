#include "qchaos/rational.hpp"

#include <cmath>
#include <numeric>

#include "qchaos/error.hpp"

namespace qchaos {

Rational::Rational(std::uint64_t num, std::uint64_t den) {
  if (den == 0) throw InputError("rational with zero denominator");
  const std::uint64_t g = std::gcd(num, den);
  num_ = num / g;
  den_ = den / g;
  if (num_ == 0) den_ = 1;
}

Rational Rational::dyadic(std::uint64_t r, unsigned exponent) {
  if (exponent > 63) throw InputError("dyadic exponent above 63");
  return Rational(r, std::uint64_t{1} << exponent);
}

double Rational::to_double() const noexcept {
  // Denominators here are powers of two in practice, so one rounding at most.
  return static_cast<double>(num_) / static_cast<double>(den_);
}

std::string Rational::to_string() const {
  if (den_ == 1) return std::to_string(num_);
  return std::to_string(num_) + "/" + std::to_string(den_);
}

__extension__ typedef unsigned __int128 u128;

std::strong_ordering operator<=>(const Rational& lhs, const Rational& rhs) {
  const u128 l = static_cast<u128>(lhs.num_) * rhs.den_;
  const u128 r = static_cast<u128>(rhs.num_) * lhs.den_;
  return l <=> r;
}

}  // namespace qchaos
