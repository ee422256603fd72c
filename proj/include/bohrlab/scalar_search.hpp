#pragma once

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <utility>
#include <vector>

namespace bohrlab::search {

struct ScalarExtremum {
  double x = 0.0;
  double fx = 0.0;
  int iterations = 0;
  double bracket_width = 0.0;
};

inline constexpr double kInvPhi = 0.6180339887498948482;  // (sqrt(5) - 1) / 2

/// Golden-section maximization of f on [lo, hi] until the bracket is at most tol wide.
template <class F>
ScalarExtremum golden_maximize(F&& f, double lo, double hi, double tol, int max_iter = 400) {
  double x1 = hi - kInvPhi * (hi - lo);
  double x2 = lo + kInvPhi * (hi - lo);
  double f1 = f(x1);
  double f2 = f(x2);
  int it = 0;
  while (hi - lo > tol && it < max_iter) {
    ++it;
    if (f1 > f2) {
      hi = x2;
      x2 = x1;
      f2 = f1;
      x1 = hi - kInvPhi * (hi - lo);
      f1 = f(x1);
    } else {
      lo = x1;
      x1 = x2;
      f1 = f2;
      x2 = lo + kInvPhi * (hi - lo);
      f2 = f(x2);
    }
    // the interior points collapse once the bracket reaches a few ulps
    if (!(x1 < x2)) break;
  }
  ScalarExtremum out;
  if (f2 >= f1) {
    out.x = x2;
    out.fx = f2;
  } else {
    out.x = x1;
    out.fx = f1;
  }
  out.iterations = it;
  out.bracket_width = hi - lo;
  return out;
}

/**
 * Global maximization on [lo, hi]: a uniform scan with `intervals` cells,
 * then golden-section search inside the two cells around each of the
 * `candidates` highest local maxima of the scan. Refining several peaks
 * matters when the global one is narrow and its nearest grid point loses to
 * a flat endpoint. Ties go to the larger abscissa.
 */
template <class F>
ScalarExtremum grid_golden_maximize(F&& f, double lo, double hi, std::size_t intervals,
                                    double tol, std::size_t candidates = 4) {
  const double h = (hi - lo) / static_cast<double>(intervals);
  auto node = [&](std::size_t i) { return i == intervals ? hi : lo + h * static_cast<double>(i); };
  std::vector<double> fs(intervals + 1);
  for (std::size_t i = 0; i <= intervals; ++i) fs[i] = f(node(i));

  std::vector<std::size_t> peaks;
  for (std::size_t i = 0; i <= intervals; ++i) {
    const bool left_ok = i == 0 || fs[i] >= fs[i - 1];
    const bool right_ok = i == intervals || fs[i] >= fs[i + 1];
    if (left_ok && right_ok) peaks.push_back(i);
  }
  std::stable_sort(peaks.begin(), peaks.end(),
                   [&](std::size_t a, std::size_t b) { return fs[a] > fs[b] || (fs[a] == fs[b] && a > b); });
  if (peaks.size() > candidates) peaks.resize(candidates);

  ScalarExtremum best;
  bool have = false;
  int iterations = 0;
  for (const std::size_t i : peaks) {
    const double blo = i == 0 ? lo : node(i - 1);
    const double bhi = i == intervals ? hi : node(i + 1);
    ScalarExtremum refined = golden_maximize(f, blo, bhi, tol);
    iterations += refined.iterations;
    if (fs[i] >= refined.fx) {
      refined.x = node(i);
      refined.fx = fs[i];
    }
    if (!have || refined.fx > best.fx || (refined.fx == best.fx && refined.x > best.x)) {
      best = refined;
      have = true;
    }
  }
  best.iterations = iterations;
  return best;
}

/**
 * Boundary of a monotone predicate: pred(lo) is false, pred(hi) is true.
 * Returns the final bracket after halving it to width <= tol.
 */
template <class Pred>
std::pair<double, double> bisect_predicate(Pred&& pred, double lo, double hi, double tol,
                                           int max_iter = 200) {
  for (int it = 0; it < max_iter && hi - lo > tol; ++it) {
    const double mid = 0.5 * (lo + hi);
    if (mid <= lo || mid >= hi) break;
    if (pred(mid)) {
      hi = mid;
    } else {
      lo = mid;
    }
  }
  return {lo, hi};
}

/// Root of f inside a sign-change bracket [lo, hi], located to width <= tol.
template <class F>
double bisect_root(F&& f, double lo, double hi, double tol) {
  const double flo = f(lo);
  if (flo == 0.0) return lo;
  const bool lo_negative = flo < 0.0;
  auto [a, b] = bisect_predicate(
      [&](double x) {
        const double fx = f(x);
        return fx == 0.0 || (fx < 0.0) != lo_negative;
      },
      lo, hi, tol);
  return std::abs(f(a)) <= std::abs(f(b)) ? a : b;
}

/**
 * Vertex of a touching (double) root by repeated three-point parabola fits
 * centred at the current estimate, with the half-width shrinking each pass.
 */
template <class F>
double parabolic_polish(F&& f, double x, double h, double lo, double hi, int passes = 3) {
  for (int i = 0; i < passes; ++i) {
    const double xm = std::max(lo, x - h);
    const double xp = std::min(hi, x + h);
    const double fm = f(xm);
    const double f0 = f(x);
    const double fp = f(xp);
    const double d1 = (fp - fm) / (xp - xm);
    const double d2 = 2.0 * ((fp - f0) / (xp - x) - (f0 - fm) / (x - xm)) / (xp - xm);
    if (!(d2 > 0.0)) break;
    const double next = std::clamp(x - d1 / d2, lo, hi);
    if (std::abs(f(next)) > std::abs(f0)) break;
    x = next;
    h *= 0.1;
  }
  return x;
}

}  // namespace bohrlab::search
