#include "bohrlab/eilenberg.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <numbers>
#include <string>

#include "bohrlab/errors.hpp"
#include "bohrlab/scalar_search.hpp"

namespace bohrlab {

namespace {

void require_r(double r) {
  if (!(r >= 0.0 && r < 1.0)) {
    throw DomainError("radius r must lie in [0,1), got " + std::to_string(r));
  }
}

void require_p(double p) {
  if (!(p >= 1.0)) throw DomainError("exponent p must be >= 1, got " + std::to_string(p));
}

double harmonic_factor(double p) {
  return std::max(std::pow(2.0, 1.0 / p - 0.5), 1.0);
}

}  // namespace

double be_bound(double r) {
  require_r(r);
  return r / std::sqrt(1.0 - r * r);
}

RadiusCertificate be_radius() {
  const double root =
      search::bisect_root([](double r) { return be_bound(r) - 1.0; }, 0.0, 0.99, 1e-15);
  return {root, RadiusMethod::bisection, std::abs(be_bound(root) - 1.0)};
}

BeCoefficientCheck be_coefficient_check(const CoefficientSeries& c) {
  if (c[0] != Complex{}) throw NonVanishingConstantTerm();
  BeCoefficientCheck out;
  for (std::size_t k = 1; k <= c.order(); ++k) out.sum_sq += std::norm(c[k]);

  constexpr int points = 64;
  constexpr std::array<double, 2> radii{0.5, 0.8};
  out.worst_modulus_excess = -1.0;
  for (const double rho : radii) {
    const double slack = std::pow(rho, static_cast<double>(c.order() + 1)) / (1.0 - rho);
    const double bound = rho / std::sqrt(1.0 - rho * rho);
    for (int j = 0; j < points; ++j) {
      const double theta = 2.0 * std::numbers::pi * j / points;
      const double modulus = std::abs(c.evaluate(std::polar(rho, theta)));
      out.worst_modulus_excess = std::max(out.worst_modulus_excess, modulus - slack - bound);
    }
  }
  out.ok = out.sum_sq <= 1.0 + kInequalityTolerance &&
           out.worst_modulus_excess <= kInequalityTolerance;
  return out;
}

double be_harmonic_bound(double p, double r) {
  require_p(p);
  require_r(r);
  return harmonic_factor(p) * std::sqrt(2.0) * r / std::sqrt(1.0 - r * r);
}

RadiusCertificate be_harmonic_radius(double p) {
  require_p(p);
  const double root = search::bisect_root([&](double r) { return be_harmonic_bound(p, r) - 1.0; },
                                          0.0, 0.99, 1e-15);
  const double factor = harmonic_factor(p);
  const double closed = 1.0 / std::sqrt(1.0 + 2.0 * factor * factor);
  if (std::abs(root - closed) > 1e-12) {
    throw ConvergenceFailure("be_harmonic_radius: bisection " + std::to_string(root) +
                             " disagrees with closed form " + std::to_string(closed));
  }
  return {root, RadiusMethod::bisection, std::abs(be_harmonic_bound(p, root) - 1.0)};
}

CertifiedSum be_harmonic_sum(const HarmonicPair& h, double p, double r) {
  require_p(p);
  require_r(r);
  const auto& a = h.analytic;
  const auto& b = h.coanalytic;
  double sum = 0.0;
  double rk = 1.0;
  for (std::size_t k = 1; k <= a.order(); ++k) {
    rk *= r;
    const double bk = k <= b.order() ? std::abs(b[k]) : 0.0;
    sum += std::pow(std::pow(std::abs(a[k]), p) + std::pow(bk, p), 1.0 / p) * rk;
  }
  // |a_k|, |b_k| <= 1 for h in the unit ball with g' dominated by h'
  const double tail =
      r == 0.0 ? 0.0
               : std::pow(2.0, 1.0 / p) * std::pow(r, static_cast<double>(a.order() + 1)) / (1.0 - r);
  return make_certified_sum(sum, tail, a.order());
}

}  // namespace bohrlab
