#include <gtest/gtest.h>

#include "luinv/census.hpp"
#include "luinv/combinatorics.hpp"
#include "luinv/errors.hpp"
#include "luinv/series.hpp"

using namespace luinv;

TEST(PowerSeries, Arithmetic) {
  const PowerSeries a(4, {1, 2, 3});
  const PowerSeries b(4, {1, -1});
  EXPECT_EQ((a * b).coeffs(), (std::vector<Rational>{1, 1, 1, -3, 0}));
  EXPECT_EQ((a * a.inverse()), PowerSeries::one(4));
  EXPECT_EQ((a + b - b), a);
  EXPECT_THROW(a * PowerSeries::one(3), std::invalid_argument);
  EXPECT_THROW(PowerSeries(3, {0, 1}).inverse(), std::invalid_argument);
}

TEST(PowerSeries, LogOfGeometricSeries) {
  // log 1/(1-t) = sum t^n / n
  const PowerSeries g = PowerSeries::euler_factor(6, 1, 1);
  const PowerSeries l = g.log();
  for (int n = 1; n <= 6; ++n) EXPECT_EQ(l.coeff(n), Rational(1, n));
  EXPECT_EQ(l.coeff(0), 0);
}

TEST(PowerSeries, EulerFactorNegativeExponent) {
  // (1 - t^2)^{3}
  const PowerSeries f = PowerSeries::euler_factor(8, 2, -3);
  EXPECT_EQ(f.coeffs(), (std::vector<Rational>{1, 0, -3, 0, 3, 0, -1, 0, 0}));
}

TEST(HilbertSeries, Examples) {
  EXPECT_EQ(hilbert_series(2, 6).coeffs(), (std::vector<Rational>{1, 1, 2, 3, 5, 7, 11}));
  for (int k = 1; k <= 8; ++k) EXPECT_EQ(hilbert_series(k, 3).coeff(2), Rational(Integer(1) << (k - 1)));
  const PowerSeries one_system = hilbert_series(1, 9);
  for (const auto& c : one_system.coeffs()) EXPECT_EQ(c, 1);
}

TEST(HilbertSeries, ProductFormAgrees) {
  for (int k = 1; k <= 5; ++k) EXPECT_EQ(hilbert_series_product_form(k, 8), hilbert_series(k, 8)) << k;
}

TEST(EulerExponents, PartitionSeriesHasUnitExponents) {
  const GeneratorCounts u = euler_exponents(hilbert_series(2, 12));
  for (int d = 1; d <= 12; ++d) EXPECT_EQ(u.at(d), 1);
}

TEST(EulerExponents, ConstantOneHasZeroExponents) {
  const GeneratorCounts u = euler_exponents(PowerSeries::one(5));
  for (int d = 1; d <= 5; ++d) EXPECT_EQ(u.at(d), 0);
}

TEST(EulerExponents, FrozenOracleValues) {
  const std::vector<int> f2{1, 3, 7, 26, 97}, f3{1, 7, 41, 604};
  const GeneratorCounts u3 = euler_exponents(hilbert_series(3, 5));
  const GeneratorCounts u4 = euler_exponents(hilbert_series(4, 4));
  for (int d = 1; d <= 5; ++d) EXPECT_EQ(u3.at(d), f2[static_cast<std::size_t>(d - 1)]);
  for (int d = 1; d <= 4; ++d) EXPECT_EQ(u4.at(d), f3[static_cast<std::size_t>(d - 1)]);
  EXPECT_EQ(free_generator_count(3, 2), 3);
  EXPECT_EQ(free_generator_count(3, 1), 1);
  EXPECT_EQ(free_generator_count(2, 9), 1);
}

TEST(EulerExponents, MatchesCensus) {
  const GeneratorCounts u = euler_exponents(hilbert_series(3, 4));
  for (int d = 1; d <= 4; ++d) EXPECT_EQ(u.at(d), count_subgroup_classes(2, d));
}

TEST(EulerExponents, LogRouteAndRoundtrip) {
  for (int k = 2; k <= 5; ++k) {
    const PowerSeries s = hilbert_series(k, 7);
    const GeneratorCounts a = euler_exponents(s);
    const GeneratorCounts b = euler_exponents_via_log(s);
    EXPECT_EQ(a.u, b.u);
    EXPECT_EQ(euler_product(a.u, 7), s);
  }
}

TEST(EulerExponents, Failures) {
  EXPECT_THROW(euler_exponents(PowerSeries(3, {2, 1})), std::invalid_argument);
  // 1 - t has u_1 = -1
  EXPECT_THROW(euler_exponents(PowerSeries(3, {1, -1})), InvariantViolation);
  // 1 + t/2 has u_1 = 1/2
  EXPECT_THROW(euler_exponents(PowerSeries(3, {1, Rational(1, 2)})), InvariantViolation);
  EXPECT_THROW(free_generator_count(1, 2), std::invalid_argument);
}
