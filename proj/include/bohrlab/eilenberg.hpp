#pragma once

#include "bohrlab/majorant.hpp"
#include "bohrlab/radius.hpp"
#include "bohrlab/series.hpp"

namespace bohrlab {

/// r / sqrt(1 - r^2): majorant of sum |a_k| r^k over Bieberbach-Eilenberg functions.
double be_bound(double r);

/// Root of be_bound(r) = 1 by bisection (1/sqrt(2)).
RadiusCertificate be_radius();

struct BeCoefficientCheck {
  double sum_sq = 0.0;
  /// largest |f(z)| - |z|/sqrt(1-|z|^2) seen on the test circles, truncation slack included
  double worst_modulus_excess = 0.0;
  bool ok = false;
};

/**
 * sum_{k>=1} |a_k|^2 <= 1 and |f(z)| <= |z|/sqrt(1-|z|^2), the latter on 64
 * points of |z| = 0.5 and |z| = 0.8. The coefficient sum has no finite tail
 * estimate (the weight is one), so only the truncated sum is compared.
 * Throws NonVanishingConstantTerm unless a_0 = 0.
 */
BeCoefficientCheck be_coefficient_check(const CoefficientSeries& c);

/// max{2^{1/p - 1/2}, 1} sqrt(2) r / sqrt(1 - r^2) for p >= 1.
double be_harmonic_bound(double p, double r);

/// Root of be_harmonic_bound(p, r) = 1, cross-checked against 1/sqrt(1 + 2 max{2^{2/p-1}, 1}).
RadiusCertificate be_harmonic_radius(double p);

/// sum_{k>=1} (|a_k|^p + |b_k|^p)^{1/p} r^k with tail 2^{1/p} r^{N+1}/(1-r).
CertifiedSum be_harmonic_sum(const HarmonicPair& h, double p, double r);

}  // namespace bohrlab
