#include "vdist/polynomial.hpp"

#include <algorithm>
#include <array>
#include <cmath>

namespace vdist {

namespace {

const std::array<double, kMaxDegree + 1>& factorial_table() {
  static const std::array<double, kMaxDegree + 1> table = [] {
    std::array<double, kMaxDegree + 1> t{};
    t[0] = 1.0;
    for (int n = 1; n <= kMaxDegree; ++n) t[n] = t[n - 1] * n;
    return t;
  }();
  return table;
}

void check_degree(int degree) {
  if (degree > kMaxDegree) throw DegreeLimitError(degree);
}

}  // namespace

DegreeLimitError::DegreeLimitError(int degree)
    : std::length_error("total degree " + std::to_string(degree) + " exceeds the limit of " +
                        std::to_string(kMaxDegree)) {}

double factorial(int n) {
  if (n < 0 || n > kMaxDegree) throw std::out_of_range("factorial argument out of range");
  return factorial_table()[static_cast<std::size_t>(n)];
}

double binomial(int n, int k) {
  if (k < 0 || k > n) return 0.0;
  k = std::min(k, n - k);
  double r = 1.0;
  for (int m = 1; m <= k; ++m) r = r * (n - k + m) / m;
  return std::round(r);
}

// ---------------------------------------------------------------------------
// Points and directions

double Point2::norm() const { return std::sqrt(std::norm(x) + std::norm(y)); }

double distance(const Point2& a, const Point2& b) { return (a - b).norm(); }

bool is_finite(Complex z) { return std::isfinite(z.real()) && std::isfinite(z.imag()); }

bool is_finite(const Point2& p) { return is_finite(p.x) && is_finite(p.y); }

Direction2::Direction2(Complex ux, Complex uy) : u_(ux, uy) {
  if (!is_finite(u_) || std::abs(std::norm(ux) + std::norm(uy) - 1.0) > 1e-12)
    throw std::invalid_argument("direction must have unit Euclidean norm");
}

Direction2 Direction2::normalized(Complex ux, Complex uy) {
  const double n = Point2(ux, uy).norm();
  if (!(n > 0.0) || !std::isfinite(n)) throw std::invalid_argument("cannot normalize direction");
  return Direction2(Unchecked{}, ux / n, uy / n);
}

// ---------------------------------------------------------------------------
// BivariatePoly

BivariatePoly::BivariatePoly() : coeffs_{Complex(0.0)} {}

BivariatePoly::BivariatePoly(int capacity, std::vector<Complex> coeffs)
    : coeffs_(std::move(coeffs)), degree_(capacity) {
  normalize();
}

void BivariatePoly::normalize() {
  for (const Complex& c : coeffs_)
    if (!is_finite(c)) throw NonFiniteError("polynomial coefficient is not finite");
  int top = -1;
  for (int k = degree_; k >= 0 && top < 0; --k)
    for (int i = 0; i <= k; ++i)
      if (coeffs_[index(i, k - i)] != Complex(0.0)) {
        top = k;
        break;
      }
  is_zero_ = top < 0;
  degree_ = std::max(top, 0);
  check_degree(degree_);
  coeffs_.resize(storage_size(degree_));
}

BivariatePoly BivariatePoly::constant(Complex c) { return monomial(c, 0, 0); }

BivariatePoly BivariatePoly::monomial(Complex c, int i, int j) {
  if (i < 0 || j < 0) throw std::invalid_argument("negative monomial exponent");
  check_degree(i + j);
  BivariateBuilder b(i + j);
  b.at(i, j) = c;
  return std::move(b).build();
}

BivariatePoly BivariatePoly::from_grid(const std::vector<std::vector<Complex>>& grid) {
  int capacity = 0;
  for (std::size_t i = 0; i < grid.size(); ++i)
    for (std::size_t j = 0; j < grid[i].size(); ++j)
      if (grid[i][j] != Complex(0.0)) capacity = std::max(capacity, static_cast<int>(i + j));
  check_degree(capacity);
  BivariateBuilder b(capacity);
  for (std::size_t i = 0; i < grid.size(); ++i)
    for (std::size_t j = 0; j < grid[i].size(); ++j)
      if (grid[i][j] != Complex(0.0)) b.at(static_cast<int>(i), static_cast<int>(j)) = grid[i][j];
  return std::move(b).build();
}

bool BivariatePoly::has_real_coefficients() const {
  return std::all_of(coeffs_.begin(), coeffs_.end(),
                     [](const Complex& c) { return c.imag() == 0.0; });
}

Complex BivariatePoly::coeff(int i, int j) const {
  if (i < 0 || j < 0 || i + j > degree_) return 0.0;
  return coeffs_[index(i, j)];
}

double BivariatePoly::max_abs_coeff() const {
  double m = 0.0;
  for (const Complex& c : coeffs_) m = std::max(m, std::abs(c));
  return m;
}

std::vector<Complex> BivariatePoly::homogeneous_part(int k) const {
  std::vector<Complex> out(static_cast<std::size_t>(k + 1), Complex(0.0));
  if (k > degree_) return out;
  std::copy_n(coeffs_.begin() + static_cast<std::ptrdiff_t>(index(0, k)), k + 1, out.begin());
  return out;
}

BivariatePoly BivariatePoly::operator-() const {
  BivariatePoly r = *this;
  for (Complex& c : r.coeffs_) c = -c;
  return r;
}

BivariatePoly operator+(const BivariatePoly& a, const BivariatePoly& b) {
  const int cap = std::max(a.degree_, b.degree_);
  std::vector<Complex> c(BivariatePoly::storage_size(cap), Complex(0.0));
  for (std::size_t n = 0; n < a.coeffs_.size(); ++n) c[n] += a.coeffs_[n];
  for (std::size_t n = 0; n < b.coeffs_.size(); ++n) c[n] += b.coeffs_[n];
  return BivariatePoly(cap, std::move(c));
}

BivariatePoly operator-(const BivariatePoly& a, const BivariatePoly& b) { return a + (-b); }

BivariatePoly operator*(const BivariatePoly& a, const BivariatePoly& b) {
  if (a.is_zero_ || b.is_zero_) return {};
  const int cap = a.degree_ + b.degree_;
  check_degree(cap);
  BivariateBuilder out(cap);
  for (int ka = 0; ka <= a.degree_; ++ka)
    for (int ia = 0; ia <= ka; ++ia) {
      const Complex ca = a.coeffs_[BivariatePoly::index(ia, ka - ia)];
      if (ca == Complex(0.0)) continue;
      for (int kb = 0; kb <= b.degree_; ++kb)
        for (int ib = 0; ib <= kb; ++ib)
          out.at(ia + ib, ka - ia + kb - ib) += ca * b.coeffs_[BivariatePoly::index(ib, kb - ib)];
    }
  return std::move(out).build();
}

BivariatePoly operator*(Complex s, const BivariatePoly& a) {
  std::vector<Complex> c = a.coeffs_;
  for (Complex& v : c) v *= s;
  return BivariatePoly(a.degree_, std::move(c));
}

BivariateBuilder::BivariateBuilder(int capacity)
    : capacity_(capacity), coeffs_(BivariatePoly::storage_size(capacity), Complex(0.0)) {
  if (capacity < 0) throw std::invalid_argument("negative capacity");
  check_degree(capacity);
}

Complex& BivariateBuilder::at(int i, int j) {
  if (i < 0 || j < 0 || i + j > capacity_) throw std::out_of_range("monomial outside builder");
  return coeffs_[BivariatePoly::index(i, j)];
}

Complex BivariateBuilder::get(int i, int j) const {
  if (i < 0 || j < 0 || i + j > capacity_) return 0.0;
  return coeffs_[BivariatePoly::index(i, j)];
}

BivariatePoly BivariateBuilder::build() && { return BivariatePoly(capacity_, std::move(coeffs_)); }

// ---------------------------------------------------------------------------
// Operations

int total_degree(const BivariatePoly& f) { return f.degree(); }

Complex eval(const BivariatePoly& f, const Point2& p) {
  const int d = f.degree();
  Complex acc = 0.0;
  for (int i = d; i >= 0; --i) {
    // coefficient of x^i as a polynomial in y, degree d - i
    Complex ci = 0.0;
    for (int j = d - i; j >= 0; --j) ci = ci * p.y + f.coeff(i, j);
    acc = acc * p.x + ci;
  }
  return acc;
}

BivariatePoly partial(const BivariatePoly& f, int i, int j) {
  if (i < 0 || j < 0) throw std::invalid_argument("negative derivative order");
  const int d = f.degree();
  if (i + j > d || f.is_zero()) return {};
  BivariateBuilder out(d - i - j);
  for (int k = i + j; k <= d; ++k)
    for (int a = i; a <= k - j; ++a) {
      const int b = k - a;
      double scale = 1.0;
      for (int m = 0; m < i; ++m) scale *= a - m;
      for (int m = 0; m < j; ++m) scale *= b - m;
      out.at(a - i, b - j) = scale * f.coeff(a, b);
    }
  return std::move(out).build();
}

BivariatePoly taylor_shift(const BivariatePoly& f, const Point2& p) {
  const int d = f.degree();
  BivariateBuilder out(d);
  std::vector<Complex> line;
  // rows: for fixed j, shift sum_i a_{i,j} x^i in x
  for (int j = 0; j <= d; ++j) {
    line.assign(static_cast<std::size_t>(d - j + 1), Complex(0.0));
    for (int i = 0; i <= d - j; ++i) line[static_cast<std::size_t>(i)] = f.coeff(i, j);
    taylor_shift_in_place(line, p.x);
    for (int i = 0; i <= d - j; ++i) out.at(i, j) = line[static_cast<std::size_t>(i)];
  }
  // columns: for fixed i, shift sum_j b_{i,j} y^j in y
  for (int i = 0; i <= d; ++i) {
    line.assign(static_cast<std::size_t>(d - i + 1), Complex(0.0));
    for (int j = 0; j <= d - i; ++j) line[static_cast<std::size_t>(j)] = out.get(i, j);
    taylor_shift_in_place(line, p.y);
    for (int j = 0; j <= d - i; ++j) out.at(i, j) = line[static_cast<std::size_t>(j)];
  }
  return std::move(out).build();
}

Complex PartialsTable::at(int i, int j) const {
  if (i < 0 || j < 0 || i + j > degree_) return 0.0;
  return values_[BivariatePoly::index(i, j)];
}

PartialsTable eval_all_partials(const BivariatePoly& f, const Point2& p) {
  const BivariatePoly g = taylor_shift(f, p);
  const int d = f.degree();
  std::vector<Complex> values(BivariatePoly::storage_size(d));
  for (int k = 0; k <= d; ++k)
    for (int i = 0; i <= k; ++i)
      values[BivariatePoly::index(i, k - i)] = g.coeff(i, k - i) * (factorial(i) * factorial(k - i));
  return PartialsTable(d, std::move(values));
}

UnivariatePoly restrict_shifted(const BivariatePoly& shifted, const Direction2& u) {
  const int d = shifted.degree();
  std::vector<Complex> px(static_cast<std::size_t>(d + 1)), py(static_cast<std::size_t>(d + 1));
  px[0] = py[0] = 1.0;
  for (int n = 1; n <= d; ++n) {
    px[static_cast<std::size_t>(n)] = px[static_cast<std::size_t>(n - 1)] * u.x();
    py[static_cast<std::size_t>(n)] = py[static_cast<std::size_t>(n - 1)] * u.y();
  }
  std::vector<Complex> g(static_cast<std::size_t>(d + 1), Complex(0.0));
  for (int k = 0; k <= d; ++k) {
    Complex s = 0.0;
    for (int i = 0; i <= k; ++i)
      s += shifted.coeff(i, k - i) * px[static_cast<std::size_t>(i)] *
           py[static_cast<std::size_t>(k - i)];
    g[static_cast<std::size_t>(k)] = s;
  }
  return UnivariatePoly(std::move(g));
}

UnivariatePoly restrict_to_line(const BivariatePoly& f, const Point2& p, const Direction2& u) {
  return restrict_shifted(taylor_shift(f, p), u);
}

Complex UnitaryMap::xx() const { return std::polar(M_SQRT1_2, theta); }
Complex UnitaryMap::xy() const { return std::polar(M_SQRT1_2, -psi); }
Complex UnitaryMap::yx() const { return std::polar(M_SQRT1_2, psi); }
Complex UnitaryMap::yy() const { return -std::polar(M_SQRT1_2, -theta); }

Point2 UnitaryMap::apply(const Point2& q) const {
  return {xx() * q.x + xy() * q.y, yx() * q.x + yy() * q.y};
}

BivariatePoly substitute_linear(const BivariatePoly& f, Complex a, Complex b, Complex c,
                                Complex d) {
  const int deg = f.degree();
  // pow_x[n][m]: coefficient of X^m Y^{n-m} in (aX + bY)^n; pow_y likewise for (cX + dY)^n
  auto powers = [deg](Complex s, Complex t) {
    std::vector<std::vector<Complex>> pw(static_cast<std::size_t>(deg + 1));
    pw[0] = {Complex(1.0)};
    for (int n = 1; n <= deg; ++n) {
      const auto& prev = pw[static_cast<std::size_t>(n - 1)];
      auto& cur = pw[static_cast<std::size_t>(n)];
      cur.assign(static_cast<std::size_t>(n + 1), Complex(0.0));
      for (std::size_t m = 0; m < prev.size(); ++m) {
        cur[m + 1] += prev[m] * s;
        cur[m] += prev[m] * t;
      }
    }
    return pw;
  };
  const auto pow_x = powers(a, b);
  const auto pow_y = powers(c, d);
  BivariateBuilder out(deg);
  for (int k = 0; k <= deg; ++k)
    for (int i = 0; i <= k; ++i) {
      const Complex coef = f.coeff(i, k - i);
      if (coef == Complex(0.0)) continue;
      const auto& lx = pow_x[static_cast<std::size_t>(i)];
      const auto& ly = pow_y[static_cast<std::size_t>(k - i)];
      for (std::size_t m = 0; m < lx.size(); ++m)
        for (std::size_t n = 0; n < ly.size(); ++n) {
          const int xp = static_cast<int>(m + n);
          out.at(xp, k - xp) += coef * lx[m] * ly[n];
        }
    }
  return std::move(out).build();
}

BivariatePoly rotate_unitary(const BivariatePoly& f, double theta, double psi) {
  const UnitaryMap u{theta, psi};
  return substitute_linear(f, u.xx(), u.xy(), u.yx(), u.yy());
}

}  // namespace vdist
