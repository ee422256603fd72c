#include <cmath>

#include <gtest/gtest.h>

#include "bohrlab/errors.hpp"
#include "bohrlab/radius.hpp"

using namespace bohrlab;

namespace {

double direct_envelope(double a, double p, double r, double w = 1.0) {
  return std::pow(a, p) + w * r * std::pow(1 - a * a, p) / (1 - r * std::pow(a, p));
}

// max over a uniform grid of 200001 points
double brute_max(double p, double r, double w = 1.0) {
  double best = 0.0;
  for (int i = 0; i <= 200000; ++i) best = std::max(best, direct_envelope(i / 200000.0, p, r, w));
  return best;
}

}  // namespace

TEST(Envelope, ValueFormula) {
  EXPECT_NEAR(envelope_value(0.5, 1.0, 0.5), 0.5 + 0.5 * 0.75 / 0.75, 1e-15);
  EXPECT_DOUBLE_EQ(envelope_value(1.0, 1.3, 0.7), 1.0);
  EXPECT_DOUBLE_EQ(envelope_value(0.0, 1.3, 0.7), 0.7);
}

TEST(Envelope, ExcessMatchesValueMinusOne) {
  for (double a : {0.1, 0.4, 0.77, 0.9}) {
    for (double p : {0.5, 1.0, 1.7}) {
      EXPECT_NEAR(envelope_excess(a, p, 0.6, false), direct_envelope(a, p, 0.6) - 1.0, 1e-14);
      EXPECT_NEAR(envelope_excess(a, p, 0.3, true), direct_envelope(a, p, 0.3, 2.0) - 1.0, 1e-14);
    }
  }
}

TEST(Envelope, ExcessKeepsSignNearOne) {
  // p = 1 at r slightly below 1/3: F(a) < 1 for every a < 1
  for (double a : {0.999, 0.99999, 0.9999999}) {
    EXPECT_LT(envelope_excess(a, 1.0, 1.0 / 3.0 - 1e-9, false), 0.0);
    EXPECT_GT(envelope_excess(a, 1.0, 1.0 / 3.0 + 1e-3, false), 0.0);
  }
}

TEST(Envelope, MaximumMatchesBruteForce) {
  for (double p : {0.5, 1.0, 1.4, 1.9}) {
    for (double r : {0.2, 0.5, 0.7}) {
      auto res = maximize_envelope(p, r);
      const double brute = brute_max(p, r);
      EXPECT_GE(res.value, brute - 1e-12) << p << " " << r;
      EXPECT_LE(res.value, brute + 1e-8) << p << " " << r;
      EXPECT_NEAR(res.value, direct_envelope(res.argmax, p, r), 1e-12);
    }
  }
}

TEST(Envelope, DoubledMaximumMatchesBruteForce) {
  for (double p : {0.8, 1.0, 1.5}) {
    auto res = maximize_envelope(p, 0.4, true);
    EXPECT_NEAR(res.value, brute_max(p, 0.4, 2.0), 1e-8);
  }
}

TEST(Envelope, BombieriCurve) {
  for (int i = 0; i < 50; ++i) {
    const double r = 1.0 / 3.0 + (std::sqrt(0.5) - 1.0 / 3.0) * i / 49.0;
    const double closed = (3.0 - std::sqrt(8.0 * (1.0 - r * r))) / r;
    EXPECT_NEAR(maximize_envelope(1.0, r).value, closed, 1e-10) << r;
    EXPECT_NEAR(bombieri_closed_form(r), closed, 1e-15);
  }
  EXPECT_NEAR(bombieri_closed_form(1.0 / 3.0), 1.0, 1e-12);
  EXPECT_NEAR(bombieri_closed_form(std::sqrt(0.5)), std::sqrt(2.0), 1e-12);
  EXPECT_NEAR(maximize_envelope(1.0, 0.5).argmax, bombieri_argmax(0.5), 1e-6);
  EXPECT_THROW(bombieri_closed_form(0.3), DomainError);
  EXPECT_THROW(bombieri_closed_form(0.75), DomainError);
}

TEST(Envelope, Domain) {
  EXPECT_THROW(maximize_envelope(0.0, 0.5), DomainError);
  EXPECT_THROW(maximize_envelope(2.5, 0.5), DomainError);
  EXPECT_THROW(maximize_envelope(1.0, 1.0), DomainError);
  EXPECT_THROW(envelope_value(1.2, 1.0, 0.5), DomainError);
}

TEST(MpTheorem1, PowerTwoIsOne) {
  for (double r : {0.0, 0.5, 0.99}) {
    auto v = mp_theorem1(2.0, r);
    EXPECT_EQ(v.value, 1.0);
    EXPECT_TRUE(v.exact);
  }
}

TEST(MpTheorem1, Branches) {
  const double p = 1.5;
  const double t = theorem1_threshold(p);
  EXPECT_NEAR(t, std::pow(2.0, -0.25), 1e-15);
  EXPECT_TRUE(mp_theorem1(p, t).exact);
  auto above = mp_theorem1(p, 0.9);
  EXPECT_FALSE(above.exact);
  EXPECT_NEAR(above.value, std::pow(1.0 - std::pow(0.9, 4.0), -0.25), 1e-14);
}

TEST(MpTheorem1, ContinuousAtThreshold) {
  for (double p : {0.3, 0.8, 1.0, 1.5, 1.9}) {
    const double t = theorem1_threshold(p);
    const double bound = std::pow(1.0 - std::pow(t, 2.0 / (2.0 - p)), p / 2.0 - 1.0);
    EXPECT_NEAR(mp_theorem1(p, t).value, bound, 1e-9) << p;
    EXPECT_NEAR(maximize_envelope(p, t).argmax, std::sqrt(0.5), 1e-5) << p;
  }
}

TEST(MpTheorem1, IncreasingInR) {
  double prev = 0.0;
  for (int i = 0; i < 40; ++i) {
    const double v = mp_theorem1(1.3, 0.02 + 0.024 * i).value;
    EXPECT_GE(v, prev - 1e-12);
    prev = v;
  }
}

TEST(PoweredRadius, ClassicalOneThird) {
  auto c = powered_radius_rp(1.0);
  EXPECT_NEAR(c.radius, 1.0 / 3.0, 1e-9);
  EXPECT_LE(c.residual, 1e-9);
}

TEST(PoweredRadius, QuotientInfimumByBruteForce) {
  for (double p : {1.2, 1.5, 1.8}) {
    double best = 1.0;
    for (int i = 0; i < 200000; ++i) best = std::min(best, rp_quotient(i / 200000.0, p));
    const double rp = powered_radius_rp(p).radius;
    EXPECT_LE(rp, best + 1e-12);
    EXPECT_GE(rp, best - 1e-8);
  }
}

TEST(PoweredRadius, KnownValues) {
  EXPECT_NEAR(powered_radius_rp(1.2).radius, 0.491017, 1e-6);
  EXPECT_NEAR(powered_radius_rp(1.5).radius, 0.677230, 1e-6);
  EXPECT_NEAR(powered_radius_rp(1.8).radius, 0.865817, 1e-6);
  EXPECT_EQ(powered_radius_rp(2.0).radius, 1.0);
}

TEST(PoweredRadius, EnvelopeIsOneUpToRadius) {
  for (double p : {1.2, 1.5, 1.8}) {
    const double rp = powered_radius_rp(p).radius;
    EXPECT_NEAR(maximize_envelope(p, rp - 1e-4).value, 1.0, 1e-9);
    EXPECT_GT(maximize_envelope(p, rp + 1e-3).value, 1.0 + 1e-7);
  }
}

TEST(PoweredRadius, VanishesBelowOne) {
  for (double p : {0.3, 0.7, 0.95}) EXPECT_EQ(powered_radius_rp(p).radius, 0.0);
  // r (2 eps)^p beats p eps once eps is small enough, so F exceeds one near a = 1
  EXPECT_GT(envelope_excess(1.0 - 1e-6, 0.7, 1e-2, false), 0.0);
  EXPECT_GT(envelope_excess(1.0 - 1e-3, 0.3, 1e-2, false), 0.0);
}

TEST(PoweredRadius, SandwichAboveOne) {
  for (int k = 1; k < 20; ++k) {
    const double p = 1.0 + k * 0.05;
    const double rp = powered_radius_rp(p).radius;
    EXPECT_LE(lower_bound_mp(p), rp + 1e-12) << p;
    EXPECT_LT(rp, theorem1_threshold(p)) << p;
  }
}

TEST(LowerBoundMp, ClosedValues) {
  EXPECT_NEAR(lower_bound_mp(1.5), 0.6, 1e-15);
  EXPECT_NEAR(lower_bound_mp(1.0), 1.0 / 3.0, 1e-15);
  EXPECT_THROW(lower_bound_mp(2.0), DomainError);
}

TEST(Paulsen, Values) {
  auto m = paulsen_majorant(0.5);
  EXPECT_DOUBLE_EQ(m.big_m, 1.25);
  EXPECT_NEAR(m.small_m, 1.0 / std::sqrt(0.75), 1e-15);
  auto low = paulsen_majorant(0.2);
  EXPECT_EQ(low.big_m, 1.0);
  EXPECT_EQ(low.small_m, 1.0);
  // the sharp p = 1 envelope never exceeds the earlier majorant
  for (double r : {0.4, 0.55, 0.7}) EXPECT_LE(bombieri_closed_form(r), paulsen_majorant(r).small_m);
}

TEST(Psymmetric, Reductions) {
  // m = 0: (3 r^p - 1)^2
  EXPECT_NEAR(psymmetric_equation(2, 0, 0.5), std::pow(3 * 0.25 - 1, 2), 1e-15);
  EXPECT_NEAR(psymmetric_radius(1, 0).radius, 1.0 / 3.0, 1e-10);
  EXPECT_NEAR(psymmetric_radius(2, 0).radius, 1.0 / std::sqrt(3.0), 1e-10);
  EXPECT_NEAR(psymmetric_radius(1, 1).radius, std::sqrt(0.5), 1e-10);
  EXPECT_NEAR(psymmetric_radius(2, 2).radius, std::pow(2.0, -0.25), 1e-10);
  EXPECT_NEAR(psymmetric_radius(3, 3).radius, std::pow(2.0, -1.0 / 6.0), 1e-10);
}

TEST(Psymmetric, ResidualAndLargestRoot) {
  for (int p = 1; p <= 4; ++p) {
    for (int m = 0; m <= p; ++m) {
      auto c = psymmetric_radius(p, m);
      EXPECT_LE(std::abs(psymmetric_equation(p, m, c.radius)), 1e-10) << p << "," << m;
      // no sign change to the right of the radius
      const double right = psymmetric_equation(p, m, 0.5 * (c.radius + 1.0));
      EXPECT_GT(right, 0.0) << p << "," << m;
    }
  }
}

TEST(Psymmetric, ExtremalAttainsOne) {
  for (auto [p, m] : {std::pair{1, 1}, {2, 1}, {2, 2}, {3, 1}}) {
    const double r = psymmetric_radius(p, m).radius;
    const double a = psymmetric_extremal_a(p, m);
    ASSERT_GT(a, 0.0);
    ASSERT_LT(a, 1.0);
    // a r^m + (1 - a^2) r^{m+p} / (1 - a r^p)
    const double rp = std::pow(r, p);
    const double sum = std::pow(r, m) * (a + (1 - a * a) * rp / (1 - a * rp));
    EXPECT_NEAR(sum, 1.0, 1e-9) << p << "," << m;
  }
  EXPECT_NEAR(psymmetric_extremal_a(1, 1), std::sqrt(0.5), 1e-12);
  EXPECT_EQ(psymmetric_extremal_a(1, 0), 1.0);
}

TEST(Psymmetric, Domain) {
  EXPECT_THROW(psymmetric_radius(0, 0), DomainError);
  EXPECT_THROW(psymmetric_radius(2, 3), DomainError);
  EXPECT_THROW(psymmetric_radius(2, -1), DomainError);
}

TEST(Blaschke, SharpnessRadii) {
  EXPECT_NEAR(blaschke_sharpness_radius(1, 1.5), theorem1_threshold(1.5), 1e-15);
  EXPECT_LT(blaschke_sharpness_radius(2, 1.5), blaschke_sharpness_radius(3, 1.5));
  EXPECT_THROW(blaschke_sharpness_radius(0, 1.5), DomainError);
}

TEST(BbLowerBound, ZeroConstantIsUpperBound) {
  for (double r : {0.9, 0.99}) {
    EXPECT_NEAR(bb_lower_bound(1.5, r, 0.1, 0.0), mp_theorem1(1.5, r).value, 1e-12);
    EXPECT_LT(bb_lower_bound(1.5, r, 0.1, 0.5), mp_theorem1(1.5, r).value);
  }
  EXPECT_THROW(bb_lower_bound(1.5, 0.5, 0.1, 0.0), DomainError);
  EXPECT_THROW(bb_lower_bound(0.5, 0.9, 0.1, 0.0), DomainError);
  EXPECT_THROW(bb_lower_bound(1.5, 0.9, 0.0, 0.0), DomainError);
}

TEST(RadiusMethod, Names) {
  EXPECT_EQ(to_string(RadiusMethod::closed_form), "closed_form");
  EXPECT_EQ(to_string(RadiusMethod::root_scan), "root_scan");
}
