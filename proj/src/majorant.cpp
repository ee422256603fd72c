#include "bohrlab/majorant.hpp"

#include <cmath>
#include <string>

#include "bohrlab/errors.hpp"

namespace bohrlab {

namespace {

void require_radius(double r) {
  if (!(r >= 0.0 && r < 1.0)) {
    throw DomainError("radius r must lie in [0,1), got " + std::to_string(r));
  }
}

void require_power(double p) {
  if (!(p > 0.0 && std::isfinite(p))) {
    throw DomainError("exponent p must be positive, got " + std::to_string(p));
  }
}

// r^{N+1} / (1 - r)
double geometric_tail(double r, std::size_t order) {
  if (r == 0.0) return 0.0;
  return std::pow(r, static_cast<double>(order + 1)) / (1.0 - r);
}

double coefficient_bound(const CoefficientSeries& c) {
  if (!c.is_schur_certified()) return 1.0;
  const double h = c.head_bound();
  return 1.0 - h * h;
}

}  // namespace

CertifiedSum make_certified_sum(double truncated, double tail, std::size_t order) {
  return {truncated, truncated + tail, truncated, tail, order};
}

double powered_tail_bound(const CoefficientSeries& c, double p, double r) {
  return std::pow(coefficient_bound(c), p) * geometric_tail(r, c.order());
}

CertifiedSum powered_sum(const CoefficientSeries& c, double p, double r) {
  require_power(p);
  require_radius(r);
  double sum = 0.0;
  double rk = 1.0;
  for (const auto& a : c.coeffs()) {
    sum += std::pow(std::abs(a), p) * rk;
    rk *= r;
  }
  return make_certified_sum(sum, powered_tail_bound(c, p, r), c.order());
}

CertifiedSum harmonic_powered_sum(const HarmonicPair& h, double p, double r) {
  require_power(p);
  require_radius(r);
  const auto& a = h.analytic;
  const auto& b = h.coanalytic;
  double sum = std::pow(std::abs(a[0]), p);
  double rk = 1.0;
  const std::size_t n = a.order();
  for (std::size_t k = 1; k <= n; ++k) {
    rk *= r;
    const double bk = k <= b.order() ? std::abs(b[k]) : 0.0;
    sum += (std::pow(std::abs(a[k]), p) + std::pow(bk, p)) * rk;
  }
  const double b_bound = std::pow(coefficient_bound(a), p / 2.0);
  const double tail = powered_tail_bound(a, p, r) + b_bound * geometric_tail(r, n);
  return make_certified_sum(sum, tail, n);
}

QuadraticCheck quadratic_sum_check(const CoefficientSeries& c, double big_r) {
  if (!(big_r > 0.0 && big_r <= 1.0)) {
    throw DomainError("quadratic_sum_check: R must lie in (0,1], got " + std::to_string(big_r));
  }
  if (!c.is_schur_certified()) {
    throw DomainError("quadratic_sum_check: series carries no Schur certificate");
  }
  const double head = std::norm(c[0]);
  QuadraticCheck out;
  double rk = 1.0;
  for (std::size_t k = 1; k <= c.order(); ++k) {
    rk *= big_r;
    out.truncated += std::norm(c[k]) * rk;
  }
  if (big_r < 1.0) {
    const double bound = 1.0 - c.head_bound() * c.head_bound();
    out.tail = bound * bound * geometric_tail(big_r, c.order());
  }
  out.lhs = out.truncated + out.tail;
  const double denom = 1.0 - head * big_r;
  out.rhs = denom > 0.0 ? big_r * (1.0 - head) * (1.0 - head) / denom : 0.0;
  out.ok = out.lhs <= out.rhs + kInequalityTolerance;
  return out;
}

}  // namespace bohrlab
