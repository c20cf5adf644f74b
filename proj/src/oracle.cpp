#include "vdist/oracle.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>

#include "vdist/bounds.hpp"

namespace vdist {

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();
constexpr double kEps = std::numeric_limits<double>::epsilon();
constexpr double kAcceptResidual = 1e-8;

// |g(z)| / sum |a_k| |z|^k, both sums by Horner.
double backward_residual(const std::vector<Complex>& a, Complex z) {
  Complex v = 0.0;
  double scale = 0.0;
  const double r = std::abs(z);
  for (auto it = a.rbegin(); it != a.rend(); ++it) {
    v = v * z + *it;
    scale = scale * r + std::abs(*it);
  }
  return scale > 0.0 ? std::abs(v) / scale : 0.0;
}

struct LineHit {
  double distance = kInf;
  Complex t;
};

LineHit nearest_root(const UnivariatePoly& g) {
  LineHit hit;
  if (g.degree() == 0) return hit;
  const RootSet rs = roots(g);
  for (std::size_t n = 0; n < rs.roots.size(); ++n) {
    if (rs.residuals[n] > kAcceptResidual) continue;
    const double d = std::abs(rs.roots[n]);
    if (d < hit.distance) hit = {d, rs.roots[n]};
  }
  return hit;
}

}  // namespace

RootSet roots(const UnivariatePoly& g, const RootSolverOptions& opts) {
  if (g.is_zero()) throw IdenticallyZeroError();
  const std::vector<Complex>& a = g.coeffs();

  RootSet out;
  std::size_t zero_roots = 0;
  while (a[zero_roots] == Complex(0.0)) ++zero_roots;
  out.roots.assign(zero_roots, Complex(0.0));

  // monic c(t) = sum c_k t^k with c_0 != 0
  const std::size_t n = a.size() - 1 - zero_roots;
  std::vector<Complex> c(a.begin() + static_cast<std::ptrdiff_t>(zero_roots), a.end());
  const Complex lead = c.back();
  for (Complex& v : c) v /= lead;

  bool converged = true;
  if (n == 1) {
    out.roots.push_back(-c[0]);
  } else if (n > 1) {
    double radius = 0.0;
    for (std::size_t k = 0; k < n; ++k) radius = std::max(radius, std::abs(c[k]));
    radius += 1.0;
    std::vector<Complex> z(n);
    const double offset = 0.5 * std::numbers::sqrt2;
    for (std::size_t m = 0; m < n; ++m)
      z[m] = std::polar(radius, 2.0 * std::numbers::pi * static_cast<double>(m) /
                                        static_cast<double>(n) + offset);

    auto at_rounding_level = [&] {
      const double floor = 8.0 * kEps * static_cast<double>(n + 1);
      return std::all_of(z.begin(), z.end(),
                         [&](Complex r) { return backward_residual(c, r) <= floor; });
    };

    converged = false;
    for (int it = 0; it < opts.max_iterations && !converged; ++it) {
      double max_step = 0.0;
      for (std::size_t m = 0; m < n; ++m) {
        Complex value = 0.0;
        for (std::size_t k = n + 1; k-- > 0;) value = value * z[m] + c[k];
        Complex denom = 1.0;
        for (std::size_t l = 0; l < n; ++l)
          if (l != m) denom *= z[m] - z[l];
        if (denom == Complex(0.0)) {
          // coincident approximations; nudge apart and retry next sweep
          z[m] += Complex(kEps, kEps) * (1.0 + std::abs(z[m])) * 1e3;
          max_step = kInf;
          continue;
        }
        const Complex step = value / denom;
        z[m] -= step;
        max_step = std::max(max_step, std::abs(step) / std::max(1.0, std::abs(z[m])));
      }
      converged = max_step < opts.tolerance || at_rounding_level();
    }
    out.roots.insert(out.roots.end(), z.begin(), z.end());
  }

  out.residuals.reserve(out.roots.size());
  for (const Complex& r : out.roots) out.residuals.push_back(backward_residual(a, r));
  out.converged =
      converged && std::all_of(out.residuals.begin(), out.residuals.end(),
                               [](double r) { return r <= kAcceptResidual; });
  return out;
}

double line_distance(const BivariatePoly& f, const Point2& p, const Direction2& u) {
  if (f.is_zero()) throw IdenticallyZeroError();
  const UnivariatePoly g = restrict_to_line(f, p, u);
  if (!(std::abs(g[0]) > kOnVarietyThreshold)) throw OnVarietyError();
  return nearest_root(g).distance;
}

void SamplingPlan::validate() const {
  if (n_alpha < 1 || n_beta < 1 || n_phi < 1 || refinement_rounds < 0 || refine_points < 1)
    throw std::invalid_argument("sampling plan counts must be positive");
  if (n_beta != 1) throw std::invalid_argument("the global phase is quotiented out; n_beta must be 1");
  if (!(shrink > 0.0 && shrink < 1.0)) throw std::invalid_argument("shrink factor must lie in (0, 1)");
}

Direction2 sweep_direction(double alpha, double phi) {
  return Direction2::normalized(std::cos(alpha), std::polar(std::sin(alpha), phi));
}

DistanceEstimate sep_estimate(const BivariatePoly& f, const Point2& p, const SamplingPlan& plan) {
  plan.validate();
  if (f.is_zero()) throw IdenticallyZeroError();
  if (f.degree() == 0) throw EmptyVarietyError();
  const BivariatePoly shifted = taylor_shift(f, p);
  if (!(std::abs(shifted.coeff(0, 0)) > kOnVarietyThreshold)) throw OnVarietyError();

  constexpr double half_pi = std::numbers::pi / 2.0;
  constexpr double two_pi = 2.0 * std::numbers::pi;

  DistanceEstimate est;
  est.value = kInf;
  Complex best_t = 0.0;
  auto try_direction = [&](double alpha, double phi) {
    const Direction2 u = sweep_direction(alpha, phi);
    const LineHit hit = nearest_root(restrict_shifted(shifted, u));
    ++est.directions_sampled;
    if (hit.distance < est.value) {
      est.value = hit.distance;
      best_t = hit.t;
      est.best_alpha = alpha;
      est.best_phi = phi;
      return true;
    }
    return false;
  };

  // Base grid. At alpha = 0 and alpha = pi/2 every phi gives the same line.
  const double step_alpha = plan.n_alpha > 1 ? half_pi / (plan.n_alpha - 1) : half_pi;
  const double step_phi = two_pi / plan.n_phi;
  for (int ia = 0; ia < plan.n_alpha; ++ia) {
    const double alpha = plan.n_alpha > 1 ? step_alpha * ia : 0.0;
    const bool degenerate = ia == 0 || (plan.n_alpha > 1 && ia == plan.n_alpha - 1);
    for (int ip = 0; ip < (degenerate ? 1 : plan.n_phi); ++ip) try_direction(alpha, step_phi * ip);
  }

  double window_alpha = step_alpha;
  double window_phi = step_phi;
  for (int round = 0; round < plan.refinement_rounds && std::isfinite(est.value); ++round) {
    const double center_alpha = est.best_alpha;
    const double center_phi = est.best_phi;
    const int m = plan.refine_points;
    for (int ia = 0; ia < m; ++ia) {
      const double alpha =
          m > 1 ? center_alpha - window_alpha + 2.0 * window_alpha * ia / (m - 1) : center_alpha;
      if (alpha < 0.0 || alpha > half_pi) continue;
      for (int ip = 0; ip < m; ++ip) {
        double phi = m > 1 ? center_phi - window_phi + 2.0 * window_phi * ip / (m - 1) : center_phi;
        phi = std::fmod(phi + two_pi, two_pi);
        if (try_direction(alpha, phi)) est.refined = true;
      }
    }
    window_alpha *= plan.shrink;
    window_phi *= plan.shrink;
  }

  if (!std::isfinite(est.value))
    throw std::runtime_error("no zero of f found on any sampled line through p");
  const Direction2 u = sweep_direction(est.best_alpha, est.best_phi);
  est.witness = p + best_t * u.vector();
  return est;
}

double chain_rule_check(const BivariatePoly& f, double theta, double psi, int k, const Point2& q) {
  if (k < 0) throw std::invalid_argument("derivative order must be nonnegative");
  const UnitaryMap u{theta, psi};
  const BivariatePoly rotated = rotate_unitary(f, theta, psi);
  const Complex lhs = eval(partial(rotated, k, 0), q);

  const PartialsTable table = eval_all_partials(f, u.apply(q));
  const Complex dx = u.xx();
  const Complex dy = u.yx();
  Complex rhs = 0.0;
  for (int i = 0; i <= k; ++i)
    rhs += binomial(k, i) * table.at(i, k - i) * std::pow(dx, i) * std::pow(dy, k - i);
  return std::abs(lhs - rhs) / (std::abs(lhs) + std::abs(rhs) + 1.0);
}

}  // namespace vdist
