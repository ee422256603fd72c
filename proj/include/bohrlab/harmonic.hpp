#pragma once

#include "bohrlab/radius.hpp"
#include "bohrlab/series.hpp"

namespace bohrlab {

/// a^p + 2r(1 - a^2)^p / (1 - r a^p).
double harmonic_envelope_value(double a, double p, double r);

struct HarmonicBound {
  double value = 1.0;
  /// whether r lies in the range where the bound is established
  bool valid = true;
};

/**
 * Majorant of |a_0|^p + sum (|a_k|^p + |b_k|^p) r^k for ||h||_inf = 1.
 * p <= 2: doubled envelope maximum, valid up to harmonic_threshold(p).
 * p > 2: max{1, 2r}, valid for every r.
 */
HarmonicBound harmonic_bound(double p, double r);

/// (2^{1/(p-2)} + 1)^{p/2-1} for p in (0,2).
double harmonic_threshold(double p);

/// (5 - 2 sqrt(6) sqrt(1 - r^2)) / r on [1/5, sqrt(2/3)].
double harmonic_closed_form_p1(double r);

/// Largest r with doubled p = 1 envelope equal to one, by bisection (1/5).
RadiusCertificate harmonic_radius_p1();

struct DominationCheck {
  double lhs = 0.0;  ///< sum |b_k|^2 r^k plus tail estimate
  double rhs = 0.0;  ///< sum |a_k|^2 r^k, truncated
  double lhs_truncated = 0.0;
  bool ok = false;
};

/// sum_{k>=1} |b_k|^2 r^k <= sum_{k>=1} |a_k|^2 r^k with the tail folded into the left side.
DominationCheck dilatation_domination_check(const HarmonicPair& h, double r);

}  // namespace bohrlab
