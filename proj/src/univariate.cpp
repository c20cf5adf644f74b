#include "vdist/polynomial.hpp"

namespace vdist {

UnivariatePoly::UnivariatePoly(std::vector<Complex> coeffs) : coeffs_(std::move(coeffs)) {
  for (const Complex& c : coeffs_)
    if (!is_finite(c)) throw NonFiniteError("polynomial coefficient is not finite");
  while (coeffs_.size() > 1 && coeffs_.back() == Complex(0.0)) coeffs_.pop_back();
  if (coeffs_.empty()) coeffs_.push_back(0.0);
  if (degree() > kMaxDegree) throw DegreeLimitError(degree());
}

Complex UnivariatePoly::eval(Complex t) const {
  Complex acc = 0.0;
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * t + *it;
  return acc;
}

UnivariatePoly UnivariatePoly::derivative(int order) const {
  if (order < 0) throw std::invalid_argument("negative derivative order");
  const int d = degree();
  if (order > d) return {};
  std::vector<Complex> out(static_cast<std::size_t>(d - order + 1));
  for (int k = order; k <= d; ++k) {
    double scale = 1.0;
    for (int m = 0; m < order; ++m) scale *= k - m;
    out[static_cast<std::size_t>(k - order)] = scale * coeffs_[static_cast<std::size_t>(k)];
  }
  return UnivariatePoly(std::move(out));
}

void taylor_shift_in_place(std::vector<Complex>& c, Complex z) {
  const std::size_t n = c.size();
  if (n < 2 || z == Complex(0.0)) return;
  for (std::size_t k = 0; k + 1 < n; ++k)
    for (std::size_t j = n - 1; j-- > k;) c[j] += z * c[j + 1];
}

UnivariatePoly UnivariatePoly::taylor_shift(Complex z) const {
  std::vector<Complex> c = coeffs_;
  taylor_shift_in_place(c, z);
  return UnivariatePoly(std::move(c));
}

std::vector<Complex> UnivariatePoly::derivatives_at(Complex z) const {
  std::vector<Complex> c = coeffs_;
  taylor_shift_in_place(c, z);
  for (std::size_t k = 0; k < c.size(); ++k) c[k] *= factorial(static_cast<int>(k));
  return c;
}

}  // namespace vdist
