#include "vdist/bounds.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

namespace vdist {

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();
constexpr double kLn2OverSqrt2 = 0.69314718055994530942 * 0.70710678118654752440;

void require_off_variety(Complex value) {
  if (!(std::abs(value) > kOnVarietyThreshold)) throw OnVarietyError();
}

double gamma_from_rows(const std::vector<OrderRow>& rows) {
  double g = 0.0;
  for (const OrderRow& r : rows) g = std::max(g, r.max_ratio);
  return g;
}

}  // namespace

std::vector<OrderRow> order_ratios(const PartialsTable& partials) {
  const double log_den = std::log(std::abs(partials.value()));
  std::vector<OrderRow> rows;
  rows.reserve(static_cast<std::size_t>(partials.degree()));
  for (int k = 1; k <= partials.degree(); ++k) {
    double best = -kInf;
    for (int i = 0; i <= k; ++i) {
      const double num = std::abs(partials.at(i, k - i));
      if (num == 0.0) continue;
      best = std::max(best, (std::log(num) - log_den) / k);
    }
    rows.push_back({k, best == -kInf ? 0.0 : std::exp(best)});
  }
  return rows;
}

BoundReport bound_report(const BivariatePoly& f, const Point2& p) {
  if (f.is_zero()) throw IdenticallyZeroError();
  const PartialsTable partials = eval_all_partials(f, p);
  require_off_variety(partials.value());

  BoundReport r;
  r.degree = f.degree();
  r.value_at_p = partials.value();
  r.per_order = order_ratios(partials);
  r.gamma = gamma_from_rows(r.per_order);
  if (r.gamma > 0.0) {
    r.lower = kLn2OverSqrt2 / r.gamma;
    r.lower_coarse = 1.0 / (3.0 * r.gamma);
    r.upper = 2.0 * r.degree / r.gamma;
  } else {
    r.lower = r.lower_coarse = r.upper = kInf;
  }
  return r;
}

double gamma(const BivariatePoly& f, const Point2& p) { return bound_report(f, p).gamma; }

LowerBound sep_lower(const BivariatePoly& f, const Point2& p) {
  const BoundReport r = bound_report(f, p);
  return {r.lower, r.lower_coarse};
}

double sep_upper(const BivariatePoly& f, const Point2& p) { return bound_report(f, p).upper; }

double univariate_sep_upper(const UnivariatePoly& g, Complex z, UnivariateConstant form) {
  const int d = g.degree();
  if (d < 1) throw std::invalid_argument("univariate bound needs degree >= 1");
  const std::vector<Complex> der = g.derivatives_at(z);
  require_off_variety(der[0]);
  const double log_value = std::log(std::abs(der[0]));
  double best = kInf;
  for (int k = 1; k <= d; ++k) {
    const double dk = std::abs(der[static_cast<std::size_t>(k)]);
    if (dk == 0.0) continue;
    // log of c_k^k
    const double log_ck = form == UnivariateConstant::Sharp
                              ? std::log(factorial(k)) + std::log(binomial(d, k))
                              : k * std::log(static_cast<double>(d));
    best = std::min(best, std::exp((log_ck + log_value - std::log(dk)) / k));
  }
  return best;
}

AxisBounds axis_bounds(const BivariatePoly& f, const Point2& p) {
  if (f.is_zero()) throw IdenticallyZeroError();
  const BivariatePoly shifted = taylor_shift(f, p);
  require_off_variety(shifted.coeff(0, 0));
  auto along = [&](const Direction2& u) {
    const UnivariatePoly g = restrict_shifted(shifted, u);
    return g.degree() == 0 ? kInf : univariate_sep_upper(g, 0.0);
  };
  return {along(Direction2(1.0, 0.0)), along(Direction2(0.0, 1.0))};
}

double coefficient_gamma(const BivariatePoly& f) {
  const Complex a00 = f.coeff(0, 0);
  if (a00 == Complex(0.0)) throw std::domain_error("constant coefficient is zero");
  const double log_a00 = std::log(std::abs(a00));
  double best = -kInf;
  for (int k = 1; k <= f.degree(); ++k)
    for (int i = 0; i <= k; ++i) {
      const double a = std::abs(f.coeff(i, k - i));
      if (a == 0.0) continue;
      const double log_weight = std::log(factorial(i) * factorial(k - i));
      best = std::max(best, (log_weight + std::log(a) - log_a00) / k);
    }
  return best == -kInf ? 0.0 : std::exp(best);
}

}  // namespace vdist
