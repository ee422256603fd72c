#pragma once

#include <cstddef>

#include "bohrlab/series.hpp"

namespace bohrlab {

/// Absolute tolerance used by the inequality flags of this module.
inline constexpr double kInequalityTolerance = 1e-10;

/// Enclosure [lower, upper] of an infinite non-negative series.
struct CertifiedSum {
  double lower = 0.0;
  double upper = 0.0;
  double truncated_value = 0.0;
  double tail_bound = 0.0;
  std::size_t order_used = 0;

  bool contains(double x, double slack = 0.0) const {
    return x >= lower - slack && x <= upper + slack;
  }
};

/// Builds the enclosure from a truncated value and a tail estimate.
CertifiedSum make_certified_sum(double truncated, double tail, std::size_t order);

/**
 * Geometric tail estimate for sum_{k>N} |a_k|^p r^k. With a Schur
 * certificate every |a_k| (k >= 1) is at most 1 - |a_0|^2; otherwise the
 * coefficients are assumed bounded by one.
 */
double powered_tail_bound(const CoefficientSeries& c, double p, double r);

/// Powered Bohr sum M_p^f(r) = sum |a_k|^p r^k. Requires p > 0 and 0 <= r < 1.
CertifiedSum powered_sum(const CoefficientSeries& c, double p, double r);

/**
 * |a_0|^p + sum_{k>=1} (|a_k|^p + |b_k|^p) r^k for h + conj(g).
 *
 * The co-analytic tail uses sum_k |b_k|^2 <= sum_{k>=1} |a_k|^2 <= 1 - |a_0|^2
 * (domination of g' by h' plus Parseval), hence |b_k|^p <= (1 - |a_0|^2)^{p/2}.
 */
CertifiedSum harmonic_powered_sum(const HarmonicPair& h, double p, double r);

struct QuadraticCheck {
  double lhs = 0.0;  ///< truncated sum plus tail estimate
  double rhs = 0.0;
  double truncated = 0.0;
  double tail = 0.0;
  bool ok = false;
};

/**
 * sum_{k>=1} |a_k|^2 R^k <= R (1-|a_0|^2)^2 / (1 - |a_0|^2 R)  for 0 < R <= 1.
 *
 * For R < 1 the left side carries the geometric tail (1-|a_0|^2)^2 R^{N+1}/(1-R).
 * At R = 1 the right side is the Parseval bound 1 - |a_0|^2 itself and no
 * finite tail estimate exists, so only the truncated sum is compared.
 * Requires a Schur-certified series.
 */
QuadraticCheck quadratic_sum_check(const CoefficientSeries& c, double big_r);

}  // namespace bohrlab
