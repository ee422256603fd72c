#include <cmath>
#include <random>
#include <vector>

#include <gtest/gtest.h>

#include "bohrlab/errors.hpp"
#include "bohrlab/majorant.hpp"
#include "bohrlab/series.hpp"

using namespace bohrlab;

namespace {

// sum of |a_k|^p r^k for the automorphism with parameter a, summed as a geometric series
double mobius_powered(double a, double p, double r) {
  return std::pow(a, p) + r * std::pow(1 - a * a, p) / (1 - r * std::pow(a, p));
}

SchurFunction random_schur(std::mt19937_64& rng, std::size_t count) {
  std::uniform_real_distribution<double> u(0.0, 1.0);
  std::vector<Complex> g(count);
  for (auto& x : g) x = std::polar(std::sqrt(u(rng)), 2.0 * M_PI * u(rng));
  return SchurFunction(g);
}

}  // namespace

TEST(PoweredSum, MobiusGeometricSeries) {
  for (double a : {0.0, 0.3, 0.75, 0.95}) {
    for (double p : {0.5, 1.0, 1.5, 2.0}) {
      for (double r : {0.1, 0.5, 0.8}) {
        auto s = powered_sum(mobius_automorphism_coeffs(a, 400), p, r);
        EXPECT_TRUE(s.contains(mobius_powered(a, p, r), 1e-13)) << a << " " << p << " " << r;
        EXPECT_LE(s.upper - s.lower, 1e-30);
      }
    }
  }
}

TEST(PoweredSum, TailEnclosesLongerSum) {
  std::mt19937_64 rng(3);
  for (int trial = 0; trial < 30; ++trial) {
    const auto f = random_schur(rng, 8);
    auto full = powered_sum(schur_synthesis(f, 600), 1.3, 0.7);
    auto cut = powered_sum(schur_synthesis(f, 12), 1.3, 0.7);
    EXPECT_LE(cut.lower, full.lower + 1e-13);
    EXPECT_GE(cut.upper, full.lower - 1e-13);
  }
}

TEST(PoweredSum, UncertifiedTail) {
  CoefficientSeries c({0.5, 0.5}, 3);
  auto s = powered_sum(c, 1.0, 0.5);
  EXPECT_DOUBLE_EQ(s.truncated_value, 0.75);
  EXPECT_DOUBLE_EQ(s.tail_bound, std::pow(0.5, 4) / 0.5);
  EXPECT_EQ(s.order_used, 3u);
}

TEST(PoweredSum, CertifiedTailUsesHead) {
  auto c = CoefficientSeries::schur_certified({0.6, 0.1});
  EXPECT_NEAR(powered_tail_bound(c, 2.0, 0.5), 0.64 * 0.64 * 0.25 / 0.5, 1e-16);
}

TEST(PoweredSum, RadiusZero) {
  auto s = powered_sum(mobius_automorphism_coeffs(0.4, 10), 1.5, 0.0);
  EXPECT_NEAR(s.lower, std::pow(0.4, 1.5), 1e-15);
  EXPECT_EQ(s.tail_bound, 0.0);
}

TEST(PoweredSum, Domain) {
  const auto c = mobius_automorphism_coeffs(0.4, 10);
  EXPECT_THROW(powered_sum(c, 0.0, 0.5), DomainError);
  EXPECT_THROW(powered_sum(c, 1.0, 1.0), DomainError);
  EXPECT_THROW(powered_sum(c, 1.0, -0.1), DomainError);
}

TEST(HarmonicPoweredSum, ZeroDilatationIsAnalyticSum) {
  const SchurFunction h({0.3, Complex(0.2, 0.5), -0.4});
  auto pair = harmonic_pair(h, SchurFunction({0.0}), 1.0, 50);
  auto hs = harmonic_powered_sum(pair, 1.2, 0.6);
  auto as = powered_sum(pair.analytic, 1.2, 0.6);
  EXPECT_NEAR(hs.truncated_value, as.truncated_value, 1e-15);
  EXPECT_GE(hs.tail_bound, as.tail_bound);
}

TEST(HarmonicPoweredSum, ConstantDilatation) {
  const double c = 0.5;
  const double a = 0.4;
  const double p = 1.0, r = 0.3;
  auto pair = harmonic_pair(SchurFunction({a, -1.0}), SchurFunction({c}), 1.0, 400);
  auto s = harmonic_powered_sum(pair, p, r);
  // a + (1 + c) r (1 - a^2) / (1 - r a)
  const double expected = a + (1.0 + c) * r * (1 - a * a) / (1 - r * a);
  EXPECT_TRUE(s.contains(expected, 1e-13));
}

TEST(QuadraticCheck, MobiusIsEquality) {
  for (double a : {0.2, 0.5, 0.8}) {
    for (double big_r : {0.3, 0.8, 1.0}) {
      auto q = quadratic_sum_check(mobius_automorphism_coeffs(a, 400), big_r);
      EXPECT_NEAR(q.lhs, q.rhs, 1e-12) << a << " " << big_r;
      EXPECT_TRUE(q.ok);
    }
  }
}

TEST(QuadraticCheck, ConstantHasZeroLeftSide) {
  std::vector<Complex> c(65, Complex{});
  c[0] = 0.7;
  auto q = quadratic_sum_check(CoefficientSeries::schur_certified(c), 0.9);
  EXPECT_DOUBLE_EQ(q.truncated, 0.0);
  EXPECT_GT(q.rhs, 0.0);
  EXPECT_TRUE(q.ok);
}

TEST(QuadraticCheck, RandomSchurFunctions) {
  std::mt19937_64 rng(17);
  for (int trial = 0; trial < 200; ++trial) {
    const auto c = schur_synthesis(random_schur(rng, 10), 64);
    for (double big_r : {0.25, 0.7, 1.0}) {
      auto q = quadratic_sum_check(c, big_r);
      EXPECT_TRUE(q.ok) << trial << " " << big_r << " " << q.lhs << " " << q.rhs;
    }
  }
}

TEST(QuadraticCheck, UnitHeadIsGuarded) {
  auto q = quadratic_sum_check(CoefficientSeries::schur_certified({1.0, 0.0}), 1.0);
  EXPECT_EQ(q.rhs, 0.0);
  EXPECT_TRUE(q.ok);
}

TEST(QuadraticCheck, Domain) {
  const auto c = mobius_automorphism_coeffs(0.5, 10);
  EXPECT_THROW(quadratic_sum_check(c, 0.0), DomainError);
  EXPECT_THROW(quadratic_sum_check(c, 1.1), DomainError);
  EXPECT_THROW(quadratic_sum_check(CoefficientSeries({0.5, 0.1}, 2), 0.5), DomainError);
}
