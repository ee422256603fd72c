#pragma once

#include <string_view>

namespace bohrlab {

/// Maximum of an envelope F(a; p, r) over a in [0, 1].
struct EnvelopeResult {
  double value = 1.0;
  /// value - 1, computed without cancellation; its sign decides whether the envelope exceeds one.
  double excess = 0.0;
  double argmax = 1.0;
  int iterations = 0;
  double bracket_width = 0.0;
};

enum class RadiusMethod { closed_form, minimization, bisection, root_scan };

std::string_view to_string(RadiusMethod m);

struct RadiusCertificate {
  double radius = 0.0;
  RadiusMethod method = RadiusMethod::closed_form;
  /// Value of the defining equation at the radius, or the disagreement between two routes.
  double residual = 0.0;
};

struct Theorem1Value {
  double value = 1.0;
  /// false when value is the strict, non-attained upper bound of the large-r branch
  bool exact = true;
};

/// F(a; p, r) = a^p + r (1 - a^2)^p / (1 - r a^p), with p in (0,2], a in [0,1], r in [0,1).
double envelope_value(double a, double p, double r);

/**
 * F(a) - 1 written as (w r (1-a^2)^p - (1-a^p)(1 - r a^p)) / (1 - r a^p) with
 * w = 2 for the doubled (harmonic) envelope. Both products are evaluated with
 * relative accuracy near a = 1, so tiny excesses keep their sign.
 */
double envelope_excess(double a, double p, double r, bool doubled);

/**
 * max_{a in [0,1]} of the envelope (doubled: a^p + 2r(1-a^2)^p/(1-r a^p)).
 * A 2048-cell scan isolates the global maximum, golden-section search
 * refines it to a bracket of 1e-12. On a plateau the largest maximizer wins.
 */
EnvelopeResult maximize_envelope(double p, double r, bool doubled = false);

/// Powered Bohr envelope M_p(r): exact maximum below 2^{p/2-1}, strict bound above.
Theorem1Value mp_theorem1(double p, double r);

/// 2^{p/2-1}, the end of the exact branch of mp_theorem1.
double theorem1_threshold(double p);

/**
 * Powered radius r_p for p in (0,2], computed twice: as the infimum of
 * (1-a^p) / (a^p(1-a^p) + (1-a^2)^p) over [0,1) and as the supremum of the r
 * with M_p(r) = 1 by bisection. The quotient tends to 0, 1/3 and 1 as a -> 1
 * for p < 1, p = 1 and p > 1 respectively, so r_p = 0 for p < 1.
 * Throws ConvergenceFailure if the routes disagree by more than 1e-9.
 */
RadiusCertificate powered_radius_rp(double p);

/// Quotient whose infimum over a in [0,1) is r_p.
double rp_quotient(double a, double p);

/// Lower estimate p / (2^{1/(2-p)} + p^{1/(2-p)})^{2-p} for r_p, p in (0,2).
double lower_bound_mp(double p);

/// (3 - sqrt(8(1 - r^2))) / r on [1/3, 1/sqrt(2)].
double bombieri_closed_form(double r);

/// Argmax (1 - sqrt(1-r^2)/sqrt(2)) / r of the p = 1 envelope on [1/3, 1/sqrt(2)].
double bombieri_argmax(double r);

struct PaulsenMajorant {
  double big_m = 1.0;
  double small_m = 1.0;
};

/// Earlier majorant M(r) and m(r) = min(M(r), 1/sqrt(1-r^2)) for the p = 1 sum.
PaulsenMajorant paulsen_majorant(double r);

/// -6 r^{p-m} + r^{2(p-m)} + 8 r^{2p} + 1.
double psymmetric_equation(int p, int m, double r);

/**
 * Largest root in (0,1) of psymmetric_equation. Sign changes on a 1e4-cell
 * grid are bisected; touching roots (no sign change, e.g. (3r-1)^2 at m = 0)
 * are located from local minima of |equation| and polished by parabola fits.
 * Throws NoRootFound when neither yields a root.
 */
RadiusCertificate psymmetric_radius(int p, int m);

/// Parameter a of the extremal z^m (z^p - a)/(1 - a z^p) at r_{p,m}.
double psymmetric_extremal_a(int p, int m);

/// (d/(d+1))^{1-p/2}: the only radii where the large-r bound could be attained by a degree-d Blaschke product.
double blaschke_sharpness_radius(int d, double p);

/**
 * Lower bound for M_p(r), 1 < p < 2, r above the threshold, with the
 * non-constructive constant C_1(eps) supplied as c. Exploration only.
 */
double bb_lower_bound(double p, double r, double eps, double c);

}  // namespace bohrlab
