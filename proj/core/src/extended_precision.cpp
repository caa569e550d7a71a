#include "qchaos/extended_precision.hpp"

#include <mpfr.h>

#include <charconv>
#include <string>

#include "qchaos/error.hpp"

namespace qchaos::extended {

namespace {

class Mpfr {
 public:
  explicit Mpfr(mpfr_prec_t prec) { mpfr_init2(value_, prec); }
  ~Mpfr() { mpfr_clear(value_); }
  Mpfr(const Mpfr&) = delete;
  Mpfr& operator=(const Mpfr&) = delete;

  mpfr_ptr get() noexcept { return value_; }
  mpfr_srcptr get() const noexcept { return value_; }

 private:
  mpfr_t value_;
};

ExtendedTrace run(Mpfr& x, std::string_view a_decimal, std::uint32_t max_steps,
                  mpfr_prec_t prec) {
  Mpfr a(prec);
  const std::string a_str(a_decimal);
  if (mpfr_set_str(a.get(), a_str.c_str(), 10, MPFR_RNDN) != 0) {
    throw InputError("invalid decimal rate '" + a_str + "'");
  }
  if (mpfr_cmp_ui(a.get(), 0) < 0 || mpfr_cmp_ui(a.get(), 4) > 0) {
    throw InputError("rate must lie in [0, 4]");
  }
  if (mpfr_cmp_ui(x.get(), 0) < 0 || mpfr_cmp_ui(x.get(), 1) > 0) {
    throw InputError("x0 must lie in [0, 1]");
  }

  Mpfr one_minus(prec);
  ExtendedTrace out;
  out.values.reserve(max_steps + 1);
  for (std::uint32_t m = 0;; ++m) {
    out.values.push_back(mpfr_get_d(x.get(), MPFR_RNDN));
    if (!out.first_crossing && mpfr_cmp_d(x.get(), 0.5) > 0) out.first_crossing = m;
    if (m == max_steps) break;
    mpfr_ui_sub(one_minus.get(), 1, x.get(), MPFR_RNDN);
    mpfr_mul(x.get(), x.get(), one_minus.get(), MPFR_RNDN);
    mpfr_mul(x.get(), x.get(), a.get(), MPFR_RNDN);
  }
  return out;
}

mpfr_prec_t checked_precision(unsigned bits) {
  if (bits < MPFR_PREC_MIN || bits > 1U << 20) throw InputError("unsupported MPFR precision");
  return static_cast<mpfr_prec_t>(bits);
}

}  // namespace

ExtendedTrace iterate(const Rational& x0, std::string_view a_decimal, std::uint32_t max_steps,
                      unsigned precision_bits) {
  const auto prec = checked_precision(precision_bits);
  Mpfr x(prec);
  Mpfr den(prec);
  mpfr_set_uj(x.get(), x0.num(), MPFR_RNDN);
  mpfr_set_uj(den.get(), x0.den(), MPFR_RNDN);
  mpfr_div(x.get(), x.get(), den.get(), MPFR_RNDN);
  return run(x, a_decimal, max_steps, prec);
}

ExtendedTrace iterate_dyadic(std::uint64_t k, std::uint32_t n, std::string_view a_decimal,
                             std::uint32_t max_steps, unsigned precision_bits) {
  const auto prec = checked_precision(precision_bits);
  Mpfr x(prec);
  mpfr_set_uj(x.get(), k, MPFR_RNDN);
  mpfr_div_2ui(x.get(), x.get(), n, MPFR_RNDN);
  return run(x, a_decimal, max_steps, prec);
}

std::string shortest_decimal(double a) {
  char buf[64];
  auto [ptr, ec] = std::to_chars(buf, buf + sizeof(buf), a);
  if (ec != std::errc{}) throw InputError("cannot format rate");
  return std::string(buf, ptr);
}

}  // namespace qchaos::extended
