#pragma once

#include <complex>
#include <cstddef>
#include <span>
#include <vector>

namespace bohrlab {

using Complex = std::complex<double>;

/// Default truncation order for synthesized series.
inline constexpr std::size_t kDefaultOrder = 64;

/**
 * Truncated Taylor expansion a_0 + a_1 z + ... + a_N z^N of a function
 * analytic in the unit disk.
 *
 * A series is *Schur certified* when it is known to be the expansion of a
 * function bounded by one in the disk. For such series the classical
 * estimate |a_k| <= 1 - |a_0|^2 (k >= 1) holds for every coefficient,
 * including the ones beyond the truncation order; this is what the tail
 * enclosures in majorant.hpp rely on. head_bound carries |a_0| for that
 * purpose and is 1 for uncertified series.
 */
class CoefficientSeries {
 public:
  /// The zero series of order 0.
  CoefficientSeries();

  /// Uncertified series, zero padded or truncated to the given order.
  CoefficientSeries(std::vector<Complex> coeffs, std::size_t order);

  /// Series known to come from the closed unit ball; head_bound = |a_0|.
  static CoefficientSeries schur_certified(std::vector<Complex> coeffs);

  std::size_t order() const { return coeffs_.size() - 1; }
  std::span<const Complex> coeffs() const { return coeffs_; }
  const Complex& operator[](std::size_t k) const { return coeffs_[k]; }
  double head_bound() const { return head_bound_; }
  bool is_schur_certified() const { return certified_; }

  /// Truncated evaluation sum_{k<=N} a_k z^k (Horner).
  Complex evaluate(Complex z) const;

 private:
  std::vector<Complex> coeffs_;
  double head_bound_ = 1.0;
  bool certified_ = false;
};

/**
 * Finite list of Schur parameters gamma_0 .. gamma_D, each in the closed
 * unit disk. A parameter of modulus one ends the list: the function is then
 * a finite Blaschke product and later entries carry no information.
 */
class SchurFunction {
 public:
  /// Throws DomainError if some |gamma_j| exceeds one (beyond rounding) or the list is empty.
  explicit SchurFunction(std::vector<Complex> params);

  std::span<const Complex> params() const { return params_; }
  std::size_t depth() const { return params_.size() - 1; }

 private:
  std::vector<Complex> params_;
};

/// Harmonic mapping h + conj(g) given by its analytic and co-analytic parts (g(0) = 0).
struct HarmonicPair {
  CoefficientSeries analytic;
  CoefficientSeries coanalytic;
};

/// Cauchy product of a and b truncated at order n.
CoefficientSeries truncated_mul(const CoefficientSeries& a, const CoefficientSeries& b,
                                std::size_t n);

/// Series r with a*r = 1 + O(z^{n+1}). Throws ZeroConstantTerm when a_0 = 0.
CoefficientSeries truncated_reciprocal(const CoefficientSeries& a, std::size_t n);

/// Disk automorphism (a - z)/(1 - a z) for 0 <= a < 1.
CoefficientSeries mobius_automorphism_coeffs(double a, std::size_t n);

/// z^m (z^p - a)/(1 - a z^p), extremal for the p-symmetric Bohr problem.
CoefficientSeries psymmetric_extremal_coeffs(int p, int m, double a, std::size_t n);

/// z (a - z)/(1 - a z), the Bieberbach-Eilenberg sharpness example.
CoefficientSeries be_extremal_coeffs(double a, std::size_t n);

/**
 * Coefficients of the bounded analytic function with the given Schur
 * parameters, via the backward recursion
 *   f_j = (gamma_j + z f_{j+1}) / (1 + conj(gamma_j) z f_{j+1}),  f_{D+1} = 0.
 * The first n+1 coefficients are exact (up to rounding) even though every
 * step is truncated at order n.
 */
CoefficientSeries schur_synthesis(const SchurFunction& s, std::size_t n);

/**
 * Forward Schur algorithm: recovers gamma_0 .. gamma_depth from the leading
 * coefficients. Stops early when a parameter of modulus one is met. Throws
 * NonSchurInput if a parameter exceeds modulus 1 + 1e-12 and DomainError if
 * depth exceeds the series order.
 */
SchurFunction schur_analysis(const CoefficientSeries& c, std::size_t depth);

/**
 * Sense-preserving style pair: h = scale * (Schur synthesis of h_params) and
 * g with g' = omega h', omega synthesized from w_params. Since |omega| <= 1,
 * |g'| <= |h'| in the disk.
 */
HarmonicPair harmonic_pair(const SchurFunction& h_params, const SchurFunction& w_params,
                           double scale, std::size_t n);

}  // namespace bohrlab
