#include "vdist/random.hpp"

#include <cmath>
#include <numbers>

namespace vdist {

double InstanceGenerator::uniform() {
  return static_cast<double>(engine_() >> 11) * 0x1.0p-53;
}

int InstanceGenerator::uniform_int(int lo, int hi) {
  const auto span = static_cast<std::uint64_t>(hi - lo + 1);
  return lo + static_cast<int>(engine_() % span);
}

Complex InstanceGenerator::in_disk(double radius) {
  const double r = radius * std::sqrt(uniform());
  return std::polar(r, 2.0 * std::numbers::pi * uniform());
}

BivariatePoly InstanceGenerator::polynomial(int degree) {
  BivariateBuilder b(degree);
  for (int k = 0; k <= degree; ++k)
    for (int i = 0; i <= k; ++i) b.at(i, k - i) = in_disk();
  return std::move(b).build();
}

BivariatePoly InstanceGenerator::real_polynomial(int degree) {
  BivariateBuilder b(degree);
  for (int k = 0; k <= degree; ++k)
    for (int i = 0; i <= k; ++i) b.at(i, k - i) = uniform(-1.0, 1.0);
  return std::move(b).build();
}

UnivariatePoly InstanceGenerator::univariate(int degree) {
  std::vector<Complex> c(static_cast<std::size_t>(degree + 1));
  for (Complex& v : c) v = in_disk();
  return UnivariatePoly(std::move(c));
}

Point2 InstanceGenerator::point(double radius) { return {in_disk(radius), in_disk(radius)}; }

}  // namespace vdist
