#include <cmath>
#include <numeric>
#include <random>

#include <gtest/gtest.h>

#include "qchaos/amplifier.hpp"
#include "qchaos/error.hpp"
#include "qchaos/extended_precision.hpp"

using namespace qchaos;
using namespace qchaos::amplifier;

namespace {

// First crossing for x0 = 2^-n, n = 1..60, a = 3.71, computed with exact
// decimal a at 400-bit precision (independent of this library).
constexpr std::uint32_t kCrossingSweep[60] = {
    1,  1,  2,  2,  3,  3,  4,  4,  5,  5,  6,  6,  7,  8,  8,  9,  9,  10, 10, 11,
    11, 12, 12, 13, 13, 14, 14, 15, 15, 16, 17, 17, 18, 18, 19, 19, 20, 20, 21, 21,
    22, 22, 23, 23, 24, 24, 25, 26, 26, 27, 27, 28, 28, 29, 29, 30, 30, 31, 31, 32};

// 3.71 * (1/8) * (7/8) and one more step, exact in decimal arithmetic:
// x2 = 3664141061 / 4096000000.
constexpr double kX1 = 0.40578125;
constexpr double kX2 = 0.894565688720703125;

std::vector<std::uint32_t> range(std::uint32_t lo, std::uint32_t hi) {
  std::vector<std::uint32_t> v(hi - lo + 1);
  std::iota(v.begin(), v.end(), lo);
  return v;
}

}  // namespace

TEST(LogisticParams, ValidatesRate) {
  EXPECT_THROW(LogisticParams(4.5, 3), InputError);
  EXPECT_THROW(LogisticParams(-0.1, 3), InputError);
  EXPECT_THROW(LogisticParams(std::nan(""), 3), InputError);
  EXPECT_EQ(LogisticParams::for_variables(7).max_steps(), 14U);
  EXPECT_EQ(LogisticParams::for_variables(7).a(), kPaperRate);
}

TEST(LogisticStep, Examples) {
  EXPECT_EQ(logistic_step(0.0, 3.71), 0.0);
  EXPECT_EQ(logistic_step(0.0, 4.0), 0.0);
  EXPECT_NEAR(logistic_step(0.125, 3.71), kX1, 1e-15);
  EXPECT_EQ(logistic_step(1.0, 3.71), 0.0);
  EXPECT_EQ(logistic_step(1.0, 2.5), 0.0);
}

TEST(LogisticStep, DomainErrors) {
  EXPECT_THROW(logistic_step(-0.01, 3.71), InputError);
  EXPECT_THROW(logistic_step(1.01, 3.71), InputError);
  EXPECT_THROW(logistic_step(0.5, 4.01), InputError);
  EXPECT_THROW(logistic_step(std::nan(""), 3.71), InputError);
}

TEST(LogisticStep, RangePreservedOnGrid) {
  for (int ai = 0; ai <= 40; ++ai) {
    const double a = ai * 0.1;
    for (int xi = 0; xi <= 1000; ++xi) {
      const double y = logistic_step(xi / 1000.0, a);
      ASSERT_GE(y, 0.0);
      ASSERT_LE(y, 1.0);
    }
  }
  EXPECT_EQ(logistic_step(0.5, 4.0), 1.0);
}

TEST(IterateMap, ZeroIsFixed) {
  const auto t = iterate_map(0.0, LogisticParams(3.71, 50));
  ASSERT_EQ(t.samples.size(), 51U);
  for (const auto& s : t.samples) EXPECT_EQ(s.value, 0.0);
  EXPECT_FALSE(t.first_crossing);
}

TEST(IterateMap, OneEighth) {
  const auto t = iterate_map(0.125, LogisticParams(3.71, 6));
  ASSERT_EQ(t.samples.size(), 7U);
  EXPECT_EQ(t.samples[0].value, 0.125);
  EXPECT_NEAR(t.samples[1].value, kX1, 1e-15);
  EXPECT_NEAR(t.samples[2].value, kX2, 1e-14);
  ASSERT_TRUE(t.first_crossing);
  EXPECT_EQ(*t.first_crossing, 2U);
  for (std::uint32_t m = 0; m < t.samples.size(); ++m) EXPECT_EQ(t.samples[m].m, m);
}

TEST(IterateMap, StartAboveThreshold) {
  EXPECT_EQ(iterate_map(0.75, LogisticParams(3.71, 4)).first_crossing, 0U);
  // Exact tie at 1/2 is not a crossing; the next step 0.9275 is.
  const auto t = iterate_map(0.5, LogisticParams(3.71, 2));
  EXPECT_EQ(t.first_crossing, 1U);
  EXPECT_EQ(iterate_map(0.5, LogisticParams(2.0, 10)).first_crossing, std::nullopt);
}

TEST(DensityIterate, ZeroSignalStaysMaximallyMixed) {
  const auto d = density_iterate({1.0, 0.0}, LogisticParams(3.71, 30));
  for (std::size_t i = 0; i < d.states.size(); ++i) {
    EXPECT_EQ(d.states[i].p0, 0.5);
    EXPECT_EQ(d.states[i].p1, 0.5);
    EXPECT_EQ(d.observable.samples[i].value, 0.0);
    EXPECT_EQ(expectation_sigma3(d.states[i]), 0.0);
  }
  EXPECT_FALSE(d.observable.first_crossing);
}

TEST(DensityIterate, OneEighth) {
  const auto d = density_iterate({7.0 / 8.0, 1.0 / 8.0}, LogisticParams(3.71, 6));
  EXPECT_NEAR(d.observable.samples[2].value, kX2, 1e-14);
  EXPECT_NEAR(d.states[2].p0, (1.0 + kX2) / 2.0, 1e-14);
  EXPECT_NEAR(d.states[2].p1, (1.0 - kX2) / 2.0, 1e-14);
  for (const auto& rho : d.states) EXPECT_NEAR(rho.p0 + rho.p1, 1.0, 1e-15);
  EXPECT_THROW(density_iterate({0.5, 0.6}, LogisticParams(3.71, 1)), InputError);
}

TEST(ExpectationSigma3, Examples) {
  EXPECT_EQ(expectation_sigma3({0.5, 0.5}), 0.0);
  EXPECT_EQ(expectation_sigma3({1.0, 0.0}), 1.0);
  EXPECT_NEAR(expectation_sigma3({(1 + 0.8946) / 2, (1 - 0.8946) / 2}), 0.8946, 1e-15);
}

TEST(AmplifierProperty, DensityTraceMatchesScalarTrace) {
  std::mt19937_64 rng(8);
  std::uniform_real_distribution<double> u(0.0, 1.0);
  for (int trial = 0; trial < 200; ++trial) {
    const double q2 = u(rng);
    const LogisticParams p(3.71, 40);
    const auto scalar = iterate_map(q2, p);
    const auto dens = density_iterate({1.0 - q2, q2}, p);
    ASSERT_EQ(dens.observable.first_crossing, scalar.first_crossing);
    for (std::size_t i = 0; i < scalar.samples.size(); ++i) {
      ASSERT_EQ(dens.observable.samples[i].value, scalar.samples[i].value);
      ASSERT_NEAR(expectation_sigma3(dens.states[i]), scalar.samples[i].value, 1e-15);
    }
  }
}

TEST(FindFirstCrossing, Examples) {
  const auto m = find_first_crossing(std::ldexp(1.0, -10), LogisticParams(3.71, 20));
  ASSERT_TRUE(m);
  EXPECT_EQ(*m, 5U);
  EXPECT_GT(*m, 9.0 / std::log2(3.71));
  EXPECT_FALSE(find_first_crossing(0.0, LogisticParams(3.71, 1000)));
  EXPECT_EQ(find_first_crossing(0.6, LogisticParams(3.71, 0)), 0U);
  EXPECT_FALSE(find_first_crossing(0.125, LogisticParams(3.71, 1)));
}

TEST(FindFirstCrossing, MatchesFrozenSweep) {
  for (std::uint32_t n = 1; n <= 60; ++n) {
    const auto m = find_first_crossing(std::ldexp(1.0, -static_cast<int>(n)),
                                       LogisticParams::for_variables(n));
    ASSERT_TRUE(m) << n;
    EXPECT_EQ(*m, kCrossingSweep[n - 1]) << n;
  }
}

TEST(AmplifierProperty, PropositionOneUpperBound) {
  for (std::uint32_t n = 1; n <= 60; ++n) {
    const auto m = find_first_crossing(std::ldexp(1.0, -static_cast<int>(n)),
                                       LogisticParams::for_variables(n));
    ASSERT_TRUE(m) << n;
    EXPECT_LE(*m, 2 * n);
  }
}

TEST(AmplifierProperty, PropositionTwoLowerBound) {
  for (std::uint32_t n = 1; n <= 60; ++n) {
    const auto m = find_first_crossing(std::ldexp(1.0, -static_cast<int>(n)),
                                       LogisticParams::for_variables(n));
    ASSERT_TRUE(m);
    EXPECT_GT(*m, (n - 1.0) / kPaperLog2Rate) << n;
    EXPECT_GT(*m, (n - 1.0) / std::log2(3.71)) << n;
  }
}

TEST(AmplifierProperty, GeneralizedStart) {
  std::mt19937_64 rng(17);
  for (std::uint32_t n = 2; n <= 40; ++n) {
    const std::uint64_t kmax = std::min<std::uint64_t>(std::uint64_t{1} << (n - 1), 1000);
    std::uniform_int_distribution<std::uint64_t> kd(1, kmax);
    for (int s = 0; s < 30; ++s) {
      const auto k = kd(rng);
      const double x0 = std::ldexp(static_cast<double>(k), -static_cast<int>(n));
      const auto m = find_first_crossing(x0, LogisticParams::for_variables(n));
      ASSERT_TRUE(m) << "n=" << n << " k=" << k;
      EXPECT_LE(*m, 2 * n);
    }
  }
}

TEST(AmplifierProperty, PreCrossingGrowth) {
  for (std::uint32_t n = 1; n <= 60; ++n) {
    const auto t = iterate_map(std::ldexp(1.0, -static_cast<int>(n)), LogisticParams::for_variables(n));
    ASSERT_TRUE(t.first_crossing);
    for (std::uint32_t m = 0; m < *t.first_crossing; ++m) {
      ASSERT_LE(t.samples[m].value, 0.5);
      ASSERT_GE(t.samples[m + 1].value, (3.71 / 2.0) * t.samples[m].value) << n << ' ' << m;
    }
  }
}

TEST(AmplifierProperty, CrossingStableUnderOneUlp) {
  for (std::uint32_t n = 1; n <= 60; ++n) {
    const double x0 = std::ldexp(1.0, -static_cast<int>(n));
    const auto params = LogisticParams::for_variables(n);
    const auto base = find_first_crossing(x0, params);
    for (double nb : {std::nextafter(x0, 0.0), std::nextafter(x0, 1.0)}) {
      const auto m = find_first_crossing(nb, params);
      ASSERT_TRUE(base && m);
      EXPECT_LE(std::abs(static_cast<int>(*m) - static_cast<int>(*base)), 1) << n;
    }
  }
}

TEST(VerifyPropositions, SmallRows) {
  const auto ns = range(1, 3);
  const auto rep = verify_propositions(ns, 1, 3.71);
  ASSERT_EQ(rep.rows.size(), 3U);
  EXPECT_TRUE(rep.all_pass());

  const auto& n1 = rep.rows[0];
  EXPECT_EQ(n1.crossing, 1U);
  EXPECT_EQ(*n1.lower_bound_paper, 0.0);

  const auto& n3 = rep.rows[2];
  EXPECT_EQ(n3.crossing, 2U);
  EXPECT_EQ(n3.crossing_extended, 2U);
  EXPECT_EQ(n3.upper_bound, 6U);
  EXPECT_NEAR(*n3.lower_bound_paper, 2.0 / 1.8912, 1e-12);
  EXPECT_NEAR(*n3.lower_bound_paper, 1.058, 5e-4);
}

TEST(VerifyPropositions, FullSweepPasses) {
  const auto ns = range(1, 60);
  const auto rep = verify_propositions(ns, 1, 3.71);
  EXPECT_TRUE(rep.all_pass());
  for (const auto& row : rep.rows) {
    EXPECT_EQ(row.crossing, row.crossing_extended) << row.n;
    EXPECT_EQ(row.crossing, kCrossingSweep[row.n - 1]);
  }
}

TEST(VerifyPropositions, OtherRateIsEmpiricalOnly) {
  const auto ns = range(1, 5);
  const auto rep = verify_propositions(ns, 1, 2.0);
  for (const auto& row : rep.rows) {
    EXPECT_FALSE(row.bounds_applicable);
    EXPECT_FALSE(row.lower_bound_paper);
  }
  EXPECT_TRUE(rep.all_pass());
}

TEST(VerifyPropositions, InvalidStartIsReportedNotThrown) {
  const std::vector<std::uint32_t> ns{2};
  const auto rep = verify_propositions(ns, 5, 3.71);  // 5/4 > 1
  ASSERT_EQ(rep.rows.size(), 1U);
  EXPECT_FALSE(rep.rows[0].pass);
  EXPECT_FALSE(rep.rows[0].note.empty());
}

TEST(ExtendedPrecision, OneEighthTrace) {
  const auto ext = extended::iterate(Rational(1, 8), "3.71", 2, 256);
  ASSERT_EQ(ext.values.size(), 3U);
  EXPECT_EQ(ext.values[1], kX1);
  EXPECT_EQ(ext.values[2], kX2);
  EXPECT_EQ(ext.first_crossing, 2U);
  EXPECT_THROW(extended::iterate(Rational(1, 8), "abc", 2), InputError);
  EXPECT_THROW(extended::iterate(Rational(1, 8), "4.5", 2), InputError);
}

TEST(ExtendedPrecision, PrecisionIsConfigurable) {
  // Pre-crossing indices agree across mantissa widths.
  for (unsigned bits : {64U, 128U, 512U}) {
    const auto t = extended::iterate_dyadic(1, 40, "3.71", 80, bits);
    EXPECT_EQ(t.first_crossing, kCrossingSweep[39]) << bits;
  }
  EXPECT_EQ(extended::shortest_decimal(3.71), "3.71");
}
