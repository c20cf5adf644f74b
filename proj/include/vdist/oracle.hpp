#pragma once

#include <vector>

#include "vdist/polynomial.hpp"

namespace vdist {

/// Raised when a distance is requested for a polynomial with no zeros (nonzero constant).
class EmptyVarietyError : public std::domain_error {
 public:
  EmptyVarietyError() : std::domain_error("variety is empty (nonzero constant polynomial)") {}
};

struct RootSet {
  std::vector<Complex> roots;
  /// |g(r)| / sum_k |a_k| |r|^k for each root.
  std::vector<double> residuals;
  bool converged = false;
};

struct RootSolverOptions {
  int max_iterations = 500;
  double tolerance = 1e-12;
};

/// All complex roots by simultaneous Weierstrass (Durand-Kerner) iteration.
/// Zero trailing coefficients become explicit zero roots. Throws IdenticallyZeroError.
/// When the iteration limit is reached the current approximations are returned
/// with converged = false.
RootSet roots(const UnivariatePoly& g, const RootSolverOptions& opts = {});

/// Distance from p to the nearest zero of f on the complex line p + t u,
/// or +inf when f is a nonzero constant on that line.
double line_distance(const BivariatePoly& f, const Point2& p, const Direction2& u);

/// Direction grid for the sweep over complex lines through p.
///
/// Directions are u(alpha, phi) = (cos alpha, sin alpha e^{i phi}) with
/// alpha in [0, pi/2] (n_alpha points, endpoints included) and phi in [0, 2 pi)
/// (n_phi points). The global phase beta of u does not change the line, so
/// n_beta is kept for completeness and must be 1. Each refinement round
/// re-samples a refine_points x refine_points window around the current best
/// direction, the window shrinking by `shrink` each round.
struct SamplingPlan {
  int n_alpha = 64;
  int n_beta = 1;
  int n_phi = 64;
  int refinement_rounds = 3;
  double shrink = 0.2;
  int refine_points = 9;

  /// Throws std::invalid_argument when a count is < 1 or shrink is outside (0, 1).
  void validate() const;
};

Direction2 sweep_direction(double alpha, double phi);

struct DistanceEstimate {
  /// Upper approximation of sep(p, V(f)); equals |witness - p|.
  double value = 0.0;
  Point2 witness;
  int directions_sampled = 0;
  /// True when a refinement round lowered the estimate found on the base grid.
  bool refined = false;
  double best_alpha = 0.0;
  double best_phi = 0.0;
};

/// Minimum line_distance over the sampled directions. Always >= the true distance
/// (every candidate is a genuine zero of f), converging to it as the grid refines.
/// Throws OnVarietyError, EmptyVarietyError or IdenticallyZeroError.
DistanceEstimate sep_estimate(const BivariatePoly& f, const Point2& p,
                              const SamplingPlan& plan = {});

/// Relative residual |LHS - RHS| / (|LHS| + |RHS| + 1) of the chain rule
///   F_{k,0}(q) = sum_i C(k,i) f_{i,k-i}(U q) (e^{i theta}/sqrt 2)^i (e^{i psi}/sqrt 2)^{k-i}
/// with F = rotate_unitary(f, theta, psi). LHS differentiates F directly; RHS comes
/// from the partials table of f at U q.
double chain_rule_check(const BivariatePoly& f, double theta, double psi, int k, const Point2& q);

}  // namespace vdist
