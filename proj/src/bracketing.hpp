#pragma once

#include <cmath>
#include <utility>

namespace waves::detail {

/// Bisection on a sign change of f over [lo, hi]; f_lo = f(lo).
template <class F>
double bisect(F&& f, double lo, double hi, double f_lo, double rel_tol) {
  for (int i = 0; i < 200; ++i) {
    const double mid = 0.5 * (lo + hi);
    if (mid <= lo || mid >= hi) break;
    const double fm = f(mid);
    if (fm == 0.0) return mid;
    if (std::signbit(fm) == std::signbit(f_lo)) {
      lo = mid;
      f_lo = fm;
    } else {
      hi = mid;
    }
    if (hi - lo <= rel_tol * std::max(std::abs(lo), std::abs(hi))) break;
  }
  return 0.5 * (lo + hi);
}

/// Golden-section maximiser of a unimodal f on [lo, hi]; returns (x, f(x)).
template <class F>
std::pair<double, double> golden_max(F&& f, double lo, double hi, double rel_tol) {
  const double r = 0.5 * (std::sqrt(5.0) - 1.0);
  double x1 = hi - r * (hi - lo), x2 = lo + r * (hi - lo);
  double f1 = f(x1), f2 = f(x2);
  for (int i = 0; i < 200 && hi - lo > rel_tol * std::abs(hi); ++i) {
    if (f1 < f2) {
      lo = x1;
      x1 = x2;
      f1 = f2;
      x2 = lo + r * (hi - lo);
      f2 = f(x2);
    } else {
      hi = x2;
      x2 = x1;
      f2 = f1;
      x1 = hi - r * (hi - lo);
      f1 = f(x1);
    }
  }
  return f1 > f2 ? std::pair{x1, f1} : std::pair{x2, f2};
}

}  // namespace waves::detail
