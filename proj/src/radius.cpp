#include "bohrlab/radius.hpp"

#include <algorithm>
#include <cmath>
#include <optional>
#include <string>
#include <vector>

#include "bohrlab/errors.hpp"
#include "bohrlab/scalar_search.hpp"

namespace bohrlab {

namespace {

constexpr std::size_t kEnvelopeCells = 2048;
constexpr double kOptimizerTol = 1e-12;
constexpr double kCrossCheckTol = 1e-9;
constexpr double kRadiusResidualTol = 1e-10;
// r_p quotient is scanned on [0, 1 - kQuotientEdge]; the a -> 1 limit is handled analytically.
constexpr double kQuotientEdge = 1e-8;

void require_p_envelope(double p) {
  if (!(p > 0.0 && p <= 2.0)) {
    throw DomainError("exponent p must lie in (0,2], got " + std::to_string(p));
  }
}

void require_p_open(double p) {
  if (!(p > 0.0 && p < 2.0)) {
    throw DomainError("exponent p must lie in (0,2), got " + std::to_string(p));
  }
}

void require_r(double r) {
  if (!(r >= 0.0 && r < 1.0)) {
    throw DomainError("radius r must lie in [0,1), got " + std::to_string(r));
  }
}

// 1 - a^p without cancellation near a = 1.
double one_minus_pow(double a, double p) { return a > 0.0 ? -std::expm1(p * std::log(a)) : 1.0; }

double excess_unchecked(double a, double p, double r, double weight) {
  if (a >= 1.0) return 0.0;
  const double ap = a > 0.0 ? std::pow(a, p) : 0.0;
  const double u = std::pow((1.0 - a) * (1.0 + a), p);
  const double den = 1.0 - r * ap;
  return (weight * r * u - one_minus_pow(a, p) * den) / den;
}

}  // namespace

std::string_view to_string(RadiusMethod m) {
  switch (m) {
    case RadiusMethod::closed_form:
      return "closed_form";
    case RadiusMethod::minimization:
      return "minimization";
    case RadiusMethod::bisection:
      return "bisection";
    case RadiusMethod::root_scan:
      return "root_scan";
  }
  return "unknown";
}

double envelope_value(double a, double p, double r) {
  require_p_envelope(p);
  require_r(r);
  if (!(a >= 0.0 && a <= 1.0)) {
    throw DomainError("envelope parameter a must lie in [0,1], got " + std::to_string(a));
  }
  if (a == 1.0) return 1.0;
  const double ap = std::pow(a, p);
  return ap + r * std::pow(1.0 - a * a, p) / (1.0 - r * ap);
}

double envelope_excess(double a, double p, double r, bool doubled) {
  require_p_envelope(p);
  require_r(r);
  if (!(a >= 0.0 && a <= 1.0)) {
    throw DomainError("envelope parameter a must lie in [0,1], got " + std::to_string(a));
  }
  return excess_unchecked(a, p, r, doubled ? 2.0 : 1.0);
}

EnvelopeResult maximize_envelope(double p, double r, bool doubled) {
  require_p_envelope(p);
  require_r(r);
  const double weight = doubled ? 2.0 : 1.0;
  const auto best = search::grid_golden_maximize(
      [&](double a) { return excess_unchecked(a, p, r, weight); }, 0.0, 1.0, kEnvelopeCells,
      kOptimizerTol);
  EnvelopeResult out;
  out.excess = best.fx;
  out.value = 1.0 + best.fx;
  out.argmax = best.x;
  out.iterations = best.iterations;
  out.bracket_width = best.bracket_width;
  return out;
}

double theorem1_threshold(double p) {
  require_p_envelope(p);
  return std::pow(2.0, p / 2.0 - 1.0);
}

Theorem1Value mp_theorem1(double p, double r) {
  require_p_envelope(p);
  require_r(r);
  if (p == 2.0) return {1.0, true};
  if (r <= theorem1_threshold(p)) return {maximize_envelope(p, r).value, true};
  return {std::pow(1.0 - std::pow(r, 2.0 / (2.0 - p)), p / 2.0 - 1.0), false};
}

double rp_quotient(double a, double p) {
  require_p_envelope(p);
  if (!(a >= 0.0 && a < 1.0)) {
    throw DomainError("quotient parameter a must lie in [0,1), got " + std::to_string(a));
  }
  const double one_minus_ap = one_minus_pow(a, p);
  const double ap = a > 0.0 ? std::pow(a, p) : 0.0;
  return one_minus_ap / (ap * one_minus_ap + std::pow((1.0 - a) * (1.0 + a), p));
}

RadiusCertificate powered_radius_rp(double p) {
  require_p_envelope(p);
  if (p == 2.0) return {1.0, RadiusMethod::closed_form, 0.0};

  // Route 1: infimum of the quotient, grid + golden section, then the a -> 1 limit.
  const auto best = search::grid_golden_maximize(
      [&](double a) { return -rp_quotient(a, p); }, 0.0, 1.0 - kQuotientEdge, kEnvelopeCells,
      kOptimizerTol);
  const double limit_at_one = p < 1.0 ? 0.0 : (p == 1.0 ? 1.0 / 3.0 : 1.0);
  const double by_infimum = std::min(-best.fx, limit_at_one);

  // Route 2: largest r with max_a F(a; p, r) = 1. For p < 1 the excess is
  // positive near a = 1 for every r > 0 (r (2 eps)^p dominates p eps), which
  // no finite grid resolves, so that case is decided analytically.
  auto exceeds_one = [&](double r) {
    if (p < 1.0 && r > 0.0) return true;
    return maximize_envelope(p, r).excess > 0.0;
  };
  const double hi = 1.0 - 1e-15;
  if (!exceeds_one(hi)) {
    throw ConvergenceFailure("powered_radius_rp: envelope never exceeds one for p = " +
                             std::to_string(p));
  }
  const auto [lo_r, hi_r] = search::bisect_predicate(exceeds_one, 0.0, hi, 1e-14);
  const double by_bisection = 0.5 * (lo_r + hi_r);

  const double disagreement = std::abs(by_infimum - by_bisection);
  if (disagreement > kCrossCheckTol) {
    throw ConvergenceFailure("powered_radius_rp: infimum " + std::to_string(by_infimum) +
                             " and bisection " + std::to_string(by_bisection) +
                             " disagree for p = " + std::to_string(p));
  }
  return {by_infimum, RadiusMethod::minimization, disagreement};
}

double lower_bound_mp(double p) {
  require_p_open(p);
  const double e = 1.0 / (2.0 - p);
  return p / std::pow(std::pow(2.0, e) + std::pow(p, e), 2.0 - p);
}

double bombieri_closed_form(double r) {
  constexpr double slack = 1e-15;
  if (!(r >= 1.0 / 3.0 - slack && r <= std::sqrt(0.5) + slack)) {
    throw DomainError("bombieri_closed_form: r must lie in [1/3, 1/sqrt(2)], got " +
                      std::to_string(r));
  }
  return (3.0 - std::sqrt(8.0 * (1.0 - r * r))) / r;
}

double bombieri_argmax(double r) {
  bombieri_closed_form(r);  // domain check
  return (1.0 - std::sqrt(1.0 - r * r) / std::sqrt(2.0)) / r;
}

PaulsenMajorant paulsen_majorant(double r) {
  require_r(r);
  PaulsenMajorant out;
  if (r > 1.0 / 3.0) {
    out.big_m = (4.0 * r * r + (1.0 - r) * (1.0 - r)) / (4.0 * r * (1.0 - r));
  }
  out.small_m = std::min(out.big_m, 1.0 / std::sqrt(1.0 - r * r));
  return out;
}

double psymmetric_equation(int p, int m, double r) {
  const double q = static_cast<double>(p - m);
  return -6.0 * std::pow(r, q) + std::pow(r, 2.0 * q) + 8.0 * std::pow(r, 2.0 * p) + 1.0;
}

RadiusCertificate psymmetric_radius(int p, int m) {
  if (p < 1 || m < 0 || m > p) {
    throw DomainError("psymmetric_radius: need p >= 1 and 0 <= m <= p, got p = " +
                      std::to_string(p) + ", m = " + std::to_string(m));
  }
  constexpr int cells = 10000;
  constexpr double h = 1.0 / cells;
  auto eq = [&](double r) { return psymmetric_equation(p, m, r); };
  auto abs_eq = [&](double r) { return std::abs(eq(r)); };
  auto deq = [&](double r) {
    const double q = static_cast<double>(p - m);
    const double pp = static_cast<double>(p);
    return -6.0 * q * std::pow(r, q - 1.0) + 2.0 * q * std::pow(r, 2.0 * q - 1.0) +
           16.0 * pp * std::pow(r, 2.0 * pp - 1.0);
  };

  std::vector<double> f(cells + 1);
  for (int i = 1; i < cells; ++i) f[i] = eq(i * h);

  std::optional<RadiusCertificate> best;
  auto offer = [&](double root, RadiusMethod method) {
    const double residual = abs_eq(root);
    if (!best || root > best->radius) best = RadiusCertificate{root, method, residual};
  };

  for (int i = 1; i + 1 < cells; ++i) {
    if (f[i] == 0.0) {
      offer(i * h, RadiusMethod::bisection);
    } else if ((f[i] < 0.0) != (f[i + 1] < 0.0) && f[i + 1] != 0.0) {
      offer(search::bisect_root(eq, i * h, (i + 1) * h, 1e-13), RadiusMethod::bisection);
    }
  }
  // touching roots: |f| has a local minimum without a neighbouring sign change
  for (int i = 2; i + 2 < cells; ++i) {
    const bool local_min = std::abs(f[i]) <= std::abs(f[i - 1]) &&
                           std::abs(f[i]) <= std::abs(f[i + 1]);
    const bool same_sign = (f[i - 1] < 0.0) == (f[i] < 0.0) && (f[i] < 0.0) == (f[i + 1] < 0.0);
    if (!local_min || !same_sign || f[i] == 0.0) continue;
    // a double root is a simple root of the derivative, which bisection pins
    // to machine precision; |f| alone only resolves it to about sqrt(eps)
    const double lo = (i - 1) * h;
    const double hi = (i + 1) * h;
    const double x = (deq(lo) < 0.0) != (deq(hi) < 0.0)
                         ? search::bisect_root(deq, lo, hi, 1e-15)
                         : search::parabolic_polish(abs_eq, i * h, h, lo, hi);
    if (abs_eq(x) <= 1e-8) offer(x, RadiusMethod::root_scan);
  }

  if (!best) {
    throw NoRootFound("no root of the p-symmetric equation in (0,1) for p = " +
                      std::to_string(p) + ", m = " + std::to_string(m));
  }
  if (best->residual > kRadiusResidualTol) {
    throw ConvergenceFailure("psymmetric_radius: residual " + std::to_string(best->residual) +
                             " above tolerance");
  }
  return *best;
}

double psymmetric_extremal_a(int p, int m) {
  const double r = psymmetric_radius(p, m).radius;
  const double rp = std::pow(r, p);
  double a = (1.0 - std::sqrt(1.0 - rp * rp) / std::sqrt(2.0)) / rp;
  if (std::abs(a - 1.0) <= 1e-12) a = 1.0;
  return a;
}

double blaschke_sharpness_radius(int d, double p) {
  if (d < 1) throw DomainError("blaschke_sharpness_radius: degree must be >= 1");
  require_p_open(p);
  const double dd = static_cast<double>(d);
  return std::pow(dd / (dd + 1.0), 1.0 - p / 2.0);
}

double bb_lower_bound(double p, double r, double eps, double c) {
  if (!(p > 1.0 && p < 2.0)) {
    throw DomainError("bb_lower_bound: p must lie in (1,2), got " + std::to_string(p));
  }
  if (!(r > theorem1_threshold(p) && r < 1.0)) {
    throw DomainError("bb_lower_bound: r must lie in (2^{p/2-1}, 1), got " + std::to_string(r));
  }
  if (!(eps > 0.0) || !(c >= 0.0)) {
    throw DomainError("bb_lower_bound: need eps > 0 and C >= 0");
  }
  const double gap = 1.0 - std::pow(r, 2.0 / (2.0 - p));
  const double log_term = std::log(1.0 / (1.0 - std::pow(r, 1.0 / (2.0 - p))));
  return std::pow(gap, p / 2.0 - 1.0) -
         c * std::pow(gap, (p - 1.0) / 2.0) * std::pow(log_term, 1.5 + eps);
}

}  // namespace bohrlab
