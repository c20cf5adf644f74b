#pragma once

// Test-only reference computations. None of these go through Taylor shifts, so
// they can check the shift-based paths independently.

#include <algorithm>
#include <cmath>
#include <complex>

#include "vdist/polynomial.hpp"

namespace vdist::testing {

inline double rel_err(Complex got, Complex want) {
  const double scale = std::max(std::abs(want), 1e-300);
  return std::abs(got - want) / scale;
}

/// Relative error with a floor on the scale, for quantities that may vanish.
inline double rel_err_floor(Complex got, Complex want, double floor) {
  return std::abs(got - want) / std::max(std::abs(want), floor);
}

/// f_{i,j}(p) by differentiating term-wise and evaluating.
inline Complex naive_partial(const BivariatePoly& f, int i, int j, const Point2& p) {
  return eval(partial(f, i, j), p);
}

/// Evaluation by summing a_{i,j} x^i y^j directly.
inline Complex naive_eval(const BivariatePoly& f, const Point2& p) {
  Complex s = 0.0;
  for (int k = 0; k <= f.degree(); ++k)
    for (int i = 0; i <= k; ++i) s += f.coeff(i, k - i) * std::pow(p.x, i) * std::pow(p.y, k - i);
  return s;
}

/// f(p + q) expanded monomial by monomial with the binomial theorem.
inline BivariatePoly binomial_shift(const BivariatePoly& f, const Point2& p) {
  const int d = f.degree();
  BivariateBuilder out(d);
  for (int k = 0; k <= d; ++k)
    for (int i = 0; i <= k; ++i) {
      const int j = k - i;
      const Complex a = f.coeff(i, j);
      for (int r = 0; r <= i; ++r)
        for (int s = 0; s <= j; ++s)
          out.at(r, s) += a * binomial(i, r) * std::pow(p.x, i - r) * binomial(j, s) *
                          std::pow(p.y, j - s);
    }
  return std::move(out).build();
}

/// Max relative coefficient difference, scaled by the largest coefficient of b.
inline double coeff_distance(const BivariatePoly& a, const BivariatePoly& b) {
  const int d = std::max(a.degree(), b.degree());
  const double scale = std::max(b.max_abs_coeff(), 1e-300);
  double m = 0.0;
  for (int k = 0; k <= d; ++k)
    for (int i = 0; i <= k; ++i) m = std::max(m, std::abs(a.coeff(i, k - i) - b.coeff(i, k - i)));
  return m / scale;
}

}  // namespace vdist::testing
