#pragma once

#include <cstdint>
#include <random>

#include "vdist/polynomial.hpp"

namespace vdist {

/// Deterministic instance generator. Draws are built from raw 64-bit mt19937_64
/// output so a seed yields identical instances on every platform.
class InstanceGenerator {
 public:
  explicit InstanceGenerator(std::uint64_t seed) : engine_(seed) {}

  /// Uniform in [0, 1).
  double uniform();
  double uniform(double lo, double hi) { return lo + (hi - lo) * uniform(); }
  int uniform_int(int lo, int hi);
  /// Uniform in the closed disk of the given radius.
  Complex in_disk(double radius = 1.0);
  /// Every coefficient of total degree <= degree uniform in the unit disk.
  /// The result has total degree exactly `degree` (with probability one).
  BivariatePoly polynomial(int degree);
  /// Coefficients uniform in [-1, 1].
  BivariatePoly real_polynomial(int degree);
  UnivariatePoly univariate(int degree);
  /// Each coordinate uniform in the disk of the given radius (a polydisk).
  Point2 point(double radius);

 private:
  std::mt19937_64 engine_;
};

}  // namespace vdist
