#include "bohrlab/harmonic.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "bohrlab/errors.hpp"
#include "bohrlab/majorant.hpp"
#include "bohrlab/scalar_search.hpp"

namespace bohrlab {

double harmonic_envelope_value(double a, double p, double r) {
  if (!(p > 0.0 && p <= 2.0)) {
    throw DomainError("exponent p must lie in (0,2], got " + std::to_string(p));
  }
  if (!(r >= 0.0 && r < 1.0)) {
    throw DomainError("radius r must lie in [0,1), got " + std::to_string(r));
  }
  if (!(a >= 0.0 && a <= 1.0)) {
    throw DomainError("envelope parameter a must lie in [0,1], got " + std::to_string(a));
  }
  if (a == 1.0) return 1.0;
  const double ap = std::pow(a, p);
  return ap + 2.0 * r * std::pow(1.0 - a * a, p) / (1.0 - r * ap);
}

double harmonic_threshold(double p) {
  if (!(p > 0.0 && p < 2.0)) {
    throw DomainError("harmonic_threshold: p must lie in (0,2), got " + std::to_string(p));
  }
  return std::pow(std::pow(2.0, 1.0 / (p - 2.0)) + 1.0, p / 2.0 - 1.0);
}

HarmonicBound harmonic_bound(double p, double r) {
  if (!(p > 0.0 && std::isfinite(p))) {
    throw DomainError("harmonic_bound: p must be positive, got " + std::to_string(p));
  }
  if (!(r >= 0.0 && r < 1.0)) {
    throw DomainError("radius r must lie in [0,1), got " + std::to_string(r));
  }
  if (p > 2.0) return {std::max(1.0, 2.0 * r), true};
  const double value = maximize_envelope(p, r, true).value;
  // at p = 2 the threshold formula degenerates to 1
  const bool valid = p == 2.0 || r <= harmonic_threshold(p);
  return {value, valid};
}

double harmonic_closed_form_p1(double r) {
  constexpr double slack = 1e-15;
  if (!(r >= 0.2 - slack && r <= std::sqrt(2.0 / 3.0) + slack)) {
    throw DomainError("harmonic_closed_form_p1: r must lie in [1/5, sqrt(2/3)], got " +
                      std::to_string(r));
  }
  return (5.0 - 2.0 * std::sqrt(6.0) * std::sqrt(1.0 - r * r)) / r;
}

RadiusCertificate harmonic_radius_p1() {
  auto exceeds_one = [](double r) { return maximize_envelope(1.0, r, true).excess > 0.0; };
  const double lo = 0.0;
  const double hi = std::sqrt(2.0 / 3.0);
  if (exceeds_one(lo) || !exceeds_one(hi)) {
    throw ConvergenceFailure("harmonic_radius_p1: bisection bracket is not valid");
  }
  const auto [a, b] = search::bisect_predicate(exceeds_one, lo, hi, 1e-14);
  const double radius = 0.5 * (a + b);
  const double residual = std::abs(harmonic_closed_form_p1(std::max(radius, 0.2)) - 1.0);
  if (residual > 1e-10) {
    throw ConvergenceFailure("harmonic_radius_p1: residual " + std::to_string(residual));
  }
  return {radius, RadiusMethod::bisection, residual};
}

DominationCheck dilatation_domination_check(const HarmonicPair& h, double r) {
  if (!(r >= 0.0 && r < 1.0)) {
    throw DomainError("radius r must lie in [0,1), got " + std::to_string(r));
  }
  const auto& a = h.analytic;
  const auto& b = h.coanalytic;
  DominationCheck out;
  double rk = 1.0;
  for (std::size_t k = 1; k <= a.order(); ++k) {
    rk *= r;
    out.rhs += std::norm(a[k]) * rk;
    if (k <= b.order()) out.lhs_truncated += std::norm(b[k]) * rk;
  }
  // |b_k|^2 <= sum_j |b_j|^2 <= sum_{j>=1} |a_j|^2 <= 1 - |a_0|^2
  const double head = a.is_schur_certified() ? a.head_bound() : 0.0;
  const double tail = r == 0.0 ? 0.0
                                : (1.0 - head * head) *
                                      std::pow(r, static_cast<double>(b.order() + 1)) / (1.0 - r);
  out.lhs = out.lhs_truncated + tail;
  out.ok = out.lhs <= out.rhs + kInequalityTolerance;
  return out;
}

}  // namespace bohrlab
