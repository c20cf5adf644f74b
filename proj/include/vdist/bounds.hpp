#pragma once

#include <vector>

#include "vdist/polynomial.hpp"

namespace vdist {

/// Raised when the query point is a zero of f (|f(p)| <= kOnVarietyThreshold).
class OnVarietyError : public std::domain_error {
 public:
  OnVarietyError() : std::domain_error("point lies on the variety (f(p) = 0)") {}
};

/// |f(p)| at or below this is treated as f(p) = 0.
inline constexpr double kOnVarietyThreshold = 1e-300;

struct OrderRow {
  int k = 0;
  /// max_i |f_{i,k-i}(p) / f(p)|^{1/k}
  double max_ratio = 0.0;
};

/// Certified two-sided distance bounds at one point.
///
/// lower: no point of V(f) is closer to p than this (ln 2 / (sqrt(2) gamma)).
/// lower_coarse: the weaker 1 / (3 gamma).
/// upper: V(f) has a point strictly closer than this (2 D / gamma).
/// A nonzero constant has an empty variety: gamma = 0 and both bounds are +inf.
struct BoundReport {
  double gamma = 0.0;
  double lower = 0.0;
  double lower_coarse = 0.0;
  double upper = 0.0;
  std::vector<OrderRow> per_order;
  int degree = 0;
  Complex value_at_p;
};

struct LowerBound {
  double lower = 0.0;
  double lower_coarse = 0.0;
};

/// Which constant multiplies |g(z)/g^{(k)}(z)|^{1/k} in the univariate bound.
enum class UnivariateConstant {
  /// (k! C(d,k))^{1/k}; never larger than d, exact for t^2 - 1 at 0.
  Sharp,
  /// d, for every k.
  Degree,
};

/// Per-order ratios max_i |f_{i,k-i}(p)/f(p)|^{1/k} for k = 1..D, computed in log space.
std::vector<OrderRow> order_ratios(const PartialsTable& partials);

/// gamma_f(p) = max over k, i of |f_{i,k-i}(p)/f(p)|^{1/k}. Zero for a nonzero constant.
/// Throws OnVarietyError or IdenticallyZeroError.
double gamma(const BivariatePoly& f, const Point2& p);

LowerBound sep_lower(const BivariatePoly& f, const Point2& p);

/// 2 D / gamma_f(p); +inf when D = 0.
double sep_upper(const BivariatePoly& f, const Point2& p);

/// Everything above from a single Taylor shift.
BoundReport bound_report(const BivariatePoly& f, const Point2& p);

/// Upper bound on min_i |z - root_i| from the derivatives of g at z:
///   min over k with g^{(k)}(z) != 0 of c_k |g(z)/g^{(k)}(z)|^{1/k}.
/// Throws OnVarietyError when g(z) = 0 and std::invalid_argument for degree 0.
double univariate_sep_upper(const UnivariatePoly& g, Complex z,
                            UnivariateConstant form = UnivariateConstant::Sharp);

/// Univariate bound applied to the horizontal (u = (1,0)) and vertical (u = (0,1))
/// lines through p. A constant restriction gives +inf.
struct AxisBounds {
  double along_x = 0.0;
  double along_y = 0.0;
};

AxisBounds axis_bounds(const BivariatePoly& f, const Point2& p);

/// Coefficient form of gamma at the origin:
///   max_k max_i (i! (k-i)! |a_{i,k-i} / a_{0,0}|)^{1/k}.
/// Throws std::domain_error when a_{0,0} = 0.
double coefficient_gamma(const BivariatePoly& f);

}  // namespace vdist
