#include "bohrlab/series.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "bohrlab/errors.hpp"

namespace bohrlab {

namespace {

// Schur parameters this close to the unit circle are snapped onto it.
constexpr double kUnimodularSnap = 1e-14;
// Rounding slack accepted on parameters read back by the forward algorithm.
constexpr double kParameterSlack = 1e-12;

void require_unit_interval(double a, const char* what) {
  if (!(a >= 0.0 && a < 1.0)) {
    throw DomainError(std::string(what) + ": parameter a must lie in [0,1), got " +
                      std::to_string(a));
  }
}

// q = num / den with den[0] = 1, all vectors of equal length.
std::vector<Complex> divide_monic(const std::vector<Complex>& num,
                                  const std::vector<Complex>& den) {
  std::vector<Complex> q(num.size());
  for (std::size_t k = 0; k < num.size(); ++k) {
    Complex acc = num[k];
    for (std::size_t i = 1; i <= k; ++i) acc -= den[i] * q[k - i];
    q[k] = acc;
  }
  return q;
}

}  // namespace

CoefficientSeries::CoefficientSeries() : coeffs_(1, Complex{}) {}

CoefficientSeries::CoefficientSeries(std::vector<Complex> coeffs, std::size_t order)
    : coeffs_(std::move(coeffs)) {
  coeffs_.resize(order + 1);
}

CoefficientSeries CoefficientSeries::schur_certified(std::vector<Complex> coeffs) {
  if (coeffs.empty()) coeffs.emplace_back();
  CoefficientSeries s;
  s.coeffs_ = std::move(coeffs);
  s.head_bound_ = std::min(1.0, std::abs(s.coeffs_[0]));
  s.certified_ = true;
  return s;
}

Complex CoefficientSeries::evaluate(Complex z) const {
  Complex acc{};
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * z + *it;
  return acc;
}

SchurFunction::SchurFunction(std::vector<Complex> params) : params_(std::move(params)) {
  if (params_.empty()) throw DomainError("SchurFunction needs at least one parameter");
  for (const auto& g : params_) {
    if (!(std::abs(g) <= 1.0 + kParameterSlack)) {
      throw DomainError("Schur parameter outside the closed unit disk: |gamma| = " +
                        std::to_string(std::abs(g)));
    }
  }
}

CoefficientSeries truncated_mul(const CoefficientSeries& a, const CoefficientSeries& b,
                                std::size_t n) {
  std::vector<Complex> out(n + 1);
  const std::size_t na = std::min(a.order(), n);
  for (std::size_t i = 0; i <= na; ++i) {
    if (a[i] == Complex{}) continue;
    const std::size_t nb = std::min(b.order(), n - i);
    for (std::size_t j = 0; j <= nb; ++j) out[i + j] += a[i] * b[j];
  }
  return CoefficientSeries(std::move(out), n);
}

CoefficientSeries truncated_reciprocal(const CoefficientSeries& a, std::size_t n) {
  if (a[0] == Complex{}) throw ZeroConstantTerm();
  const Complex inv = 1.0 / a[0];
  std::vector<Complex> r(n + 1);
  r[0] = inv;
  for (std::size_t k = 1; k <= n; ++k) {
    Complex acc{};
    const std::size_t top = std::min(k, a.order());
    for (std::size_t i = 1; i <= top; ++i) acc += a[i] * r[k - i];
    r[k] = -inv * acc;
  }
  return CoefficientSeries(std::move(r), n);
}

CoefficientSeries mobius_automorphism_coeffs(double a, std::size_t n) {
  require_unit_interval(a, "mobius_automorphism_coeffs");
  std::vector<Complex> c(n + 1);
  c[0] = a;
  double power = 1.0;  // a^{k-1}
  for (std::size_t k = 1; k <= n; ++k) {
    c[k] = -(1.0 - a * a) * power;
    power *= a;
  }
  return CoefficientSeries::schur_certified(std::move(c));
}

CoefficientSeries psymmetric_extremal_coeffs(int p, int m, double a, std::size_t n) {
  if (p < 1 || m < 0 || m > p) {
    throw DomainError("psymmetric_extremal_coeffs: need p >= 1 and 0 <= m <= p");
  }
  require_unit_interval(a, "psymmetric_extremal_coeffs");
  std::vector<Complex> c(n + 1);
  const auto step = static_cast<std::size_t>(p);
  auto idx = static_cast<std::size_t>(m);
  if (idx <= n) c[idx] = -a;
  double power = 1.0;  // a^{j-1}
  for (idx += step; idx <= n; idx += step) {
    c[idx] = (1.0 - a * a) * power;
    power *= a;
  }
  return CoefficientSeries::schur_certified(std::move(c));
}

CoefficientSeries be_extremal_coeffs(double a, std::size_t n) {
  require_unit_interval(a, "be_extremal_coeffs");
  std::vector<Complex> c(n + 1);
  if (n >= 1) c[1] = a;
  double power = 1.0;  // a^{k-2}
  for (std::size_t k = 2; k <= n; ++k) {
    c[k] = -(1.0 - a * a) * power;
    power *= a;
  }
  return CoefficientSeries::schur_certified(std::move(c));
}

CoefficientSeries schur_synthesis(const SchurFunction& s, std::size_t n) {
  const auto params = s.params();
  std::size_t last = params.size();
  std::vector<Complex> f(n + 1);
  for (std::size_t j = 0; j < params.size(); ++j) {
    const double mod = std::abs(params[j]);
    if (mod >= 1.0 - kUnimodularSnap) {
      f[0] = params[j] / mod;  // f_j is the unimodular constant
      last = j;
      break;
    }
  }

  std::vector<Complex> num(n + 1);
  std::vector<Complex> den(n + 1);
  for (std::size_t j = last; j-- > 0;) {
    const Complex g = params[j];
    const Complex gbar = std::conj(g);
    num[0] = g;
    den[0] = 1.0;
    for (std::size_t k = 1; k <= n; ++k) {
      num[k] = f[k - 1];
      den[k] = gbar * f[k - 1];
    }
    f = divide_monic(num, den);
  }
  return CoefficientSeries::schur_certified(std::move(f));
}

SchurFunction schur_analysis(const CoefficientSeries& c, std::size_t depth) {
  if (depth > c.order()) {
    throw DomainError("schur_analysis: depth " + std::to_string(depth) +
                      " exceeds series order " + std::to_string(c.order()));
  }
  std::vector<Complex> f(c.coeffs().begin(), c.coeffs().end());
  std::vector<Complex> params;
  for (std::size_t j = 0; j <= depth; ++j) {
    const Complex g = f[0];
    const double mod = std::abs(g);
    if (mod > 1.0 + kParameterSlack) {
      throw NonSchurInput("Schur parameter " + std::to_string(j) + " has modulus " +
                          std::to_string(mod));
    }
    if (mod >= 1.0 - kParameterSlack) {
      params.push_back(g / mod);
      break;
    }
    params.push_back(g);
    if (j == depth) break;

    // f <- (f - g) / (z (1 - conj(g) f)); one coefficient is consumed per step.
    const Complex gbar = std::conj(g);
    const double head = 1.0 - mod * mod;
    std::vector<Complex> num(f.size() - 1);
    std::vector<Complex> den(f.size() - 1);
    for (std::size_t k = 0; k + 1 < f.size(); ++k) {
      num[k] = f[k + 1] / head;
      den[k] = (k == 0 ? 1.0 : -gbar * f[k] / head);
    }
    f = divide_monic(num, den);
  }
  return SchurFunction(std::move(params));
}

HarmonicPair harmonic_pair(const SchurFunction& h_params, const SchurFunction& w_params,
                           double scale, std::size_t n) {
  if (!(scale > 0.0 && scale <= 1.0)) {
    throw DomainError("harmonic_pair: scale must lie in (0,1]");
  }
  const CoefficientSeries base = schur_synthesis(h_params, n);
  const CoefficientSeries omega = schur_synthesis(w_params, n);

  std::vector<Complex> a(n + 1);
  for (std::size_t k = 0; k <= n; ++k) a[k] = scale * base[k];

  // g' = omega h'  =>  k b_k = sum_{j<k} omega_j (k-j) a_{k-j}
  std::vector<Complex> b(n + 1);
  for (std::size_t k = 1; k <= n; ++k) {
    Complex acc{};
    for (std::size_t j = 0; j < k; ++j) {
      acc += omega[j] * static_cast<double>(k - j) * a[k - j];
    }
    b[k] = acc / static_cast<double>(k);
  }
  // |scale f_k| <= scale (1 - |f_0|^2) <= 1 - scale^2 |f_0|^2, so h stays certified
  return {CoefficientSeries::schur_certified(std::move(a)), CoefficientSeries(std::move(b), n)};
}

}  // namespace bohrlab
