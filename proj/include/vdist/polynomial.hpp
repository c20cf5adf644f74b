#pragma once

#include <complex>
#include <cstddef>
#include <stdexcept>
#include <string>
#include <vector>

namespace vdist {

using Complex = std::complex<double>;

/// Largest total degree accepted anywhere in the library. Keeps i!*j! finite in double.
inline constexpr int kMaxDegree = 120;

class DegreeLimitError : public std::length_error {
 public:
  explicit DegreeLimitError(int degree);
};

class NonFiniteError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

/// Thrown when an operation needs a polynomial that is not identically zero.
class IdenticallyZeroError : public std::domain_error {
 public:
  IdenticallyZeroError() : std::domain_error("polynomial is identically zero") {}
};

/// A point of C^2.
struct Point2 {
  Complex x;
  Complex y;

  Point2() = default;
  Point2(Complex x_, Complex y_) : x(x_), y(y_) {}

  double norm() const;
  friend Point2 operator+(const Point2& a, const Point2& b) { return {a.x + b.x, a.y + b.y}; }
  friend Point2 operator-(const Point2& a, const Point2& b) { return {a.x - b.x, a.y - b.y}; }
  friend Point2 operator*(Complex s, const Point2& a) { return {s * a.x, s * a.y}; }
  friend bool operator==(const Point2&, const Point2&) = default;
};

double distance(const Point2& a, const Point2& b);
bool is_finite(Complex z);
bool is_finite(const Point2& p);

/// Unit vector of C^2, |u_x|^2 + |u_y|^2 = 1 to within 1e-12.
class Direction2 {
 public:
  /// Throws std::invalid_argument unless (ux, uy) already has unit norm.
  Direction2(Complex ux, Complex uy);

  /// Scales (ux, uy) to unit norm. Throws std::invalid_argument for the zero vector.
  static Direction2 normalized(Complex ux, Complex uy);

  Complex x() const { return u_.x; }
  Complex y() const { return u_.y; }
  const Point2& vector() const { return u_; }

 private:
  struct Unchecked {};
  Direction2(Unchecked, Complex ux, Complex uy) : u_(ux, uy) {}
  Point2 u_;
};

/// Dense univariate polynomial; coeffs()[k] multiplies t^k.
/// Exactly-zero leading coefficients are trimmed on construction.
class UnivariatePoly {
 public:
  UnivariatePoly() : coeffs_{Complex(0.0)} {}
  explicit UnivariatePoly(std::vector<Complex> coeffs);

  int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
  bool is_zero() const { return coeffs_.size() == 1 && coeffs_[0] == Complex(0.0); }
  const std::vector<Complex>& coeffs() const { return coeffs_; }
  Complex operator[](int k) const { return coeffs_.at(static_cast<std::size_t>(k)); }
  Complex leading() const { return coeffs_.back(); }

  Complex eval(Complex t) const;
  UnivariatePoly derivative(int order = 1) const;
  /// g(t + z), by repeated synthetic division.
  UnivariatePoly taylor_shift(Complex z) const;
  /// g(z), g'(z), ..., g^{(d)}(z).
  std::vector<Complex> derivatives_at(Complex z) const;

  friend bool operator==(const UnivariatePoly&, const UnivariatePoly&) = default;

 private:
  std::vector<Complex> coeffs_;
};

/// Shifts the coefficient vector in place so it represents c(t + z). O(n^2).
void taylor_shift_in_place(std::vector<Complex>& coeffs, Complex z);

/// Dense bivariate polynomial sum a_{i,j} x^i y^j over i + j <= D.
///
/// Coefficients are stored triangularly, grouped by total degree k = i + j, so
/// the entries of one homogeneous part are contiguous. The degree is the exact
/// maximum of i + j over nonzero coefficients; nothing is epsilon-trimmed.
class BivariatePoly {
 public:
  /// The zero polynomial.
  BivariatePoly();
  static BivariatePoly constant(Complex c);
  static BivariatePoly monomial(Complex c, int i, int j);

  /// Builds from a grid where grid[i][j] is the coefficient of x^i y^j.
  /// Rows may be ragged; entries with i + j above kMaxDegree must be zero.
  static BivariatePoly from_grid(const std::vector<std::vector<Complex>>& grid);

  int degree() const { return degree_; }
  bool is_zero() const { return is_zero_; }
  bool has_real_coefficients() const;

  /// a_{i,j}; zero outside the stored triangle.
  Complex coeff(int i, int j) const;
  /// max |a_{i,j}|
  double max_abs_coeff() const;
  /// Coefficients of total degree k, ordered by i = 0..k (entry i is a_{i,k-i}).
  std::vector<Complex> homogeneous_part(int k) const;

  BivariatePoly operator-() const;
  friend BivariatePoly operator+(const BivariatePoly& a, const BivariatePoly& b);
  friend BivariatePoly operator-(const BivariatePoly& a, const BivariatePoly& b);
  friend BivariatePoly operator*(const BivariatePoly& a, const BivariatePoly& b);
  friend BivariatePoly operator*(Complex s, const BivariatePoly& a);
  friend bool operator==(const BivariatePoly&, const BivariatePoly&) = default;

  static std::size_t index(int i, int j) {
    const int k = i + j;
    return static_cast<std::size_t>(k) * static_cast<std::size_t>(k + 1) / 2 +
           static_cast<std::size_t>(i);
  }
  static std::size_t storage_size(int degree) { return index(0, degree + 1); }

 private:
  friend class BivariateBuilder;
  BivariatePoly(int capacity, std::vector<Complex> coeffs);
  void normalize();

  std::vector<Complex> coeffs_;
  int degree_ = 0;
  bool is_zero_ = true;
};

/// Mutable coefficient triangle used to assemble a BivariatePoly.
class BivariateBuilder {
 public:
  explicit BivariateBuilder(int capacity);

  int capacity() const { return capacity_; }
  Complex& at(int i, int j);
  Complex get(int i, int j) const;
  BivariatePoly build() &&;

 private:
  int capacity_;
  std::vector<Complex> coeffs_;
};

int total_degree(const BivariatePoly& f);

/// f(p), Horner in y for each x-coefficient, then Horner in x.
Complex eval(const BivariatePoly& f, const Point2& p);

/// d^{i+j} f / dx^i dy^j by direct term-wise differentiation.
BivariatePoly partial(const BivariatePoly& f, int i, int j);

/// g(x, y) = f(p_x + x, p_y + y), computed by univariate shifts of the rows in x,
/// then of the columns in y. b_{i,j} = f_{i,j}(p) / (i! j!).
BivariatePoly taylor_shift(const BivariatePoly& f, const Point2& p);

/// Table of every mixed partial f_{i,j}(p) with i + j <= D.
class PartialsTable {
 public:
  PartialsTable(int degree, std::vector<Complex> values)
      : degree_(degree), values_(std::move(values)) {}

  int degree() const { return degree_; }
  /// d^{i+j} f / dx^i dy^j at p; zero when i + j > D.
  Complex at(int i, int j) const;
  Complex value() const { return values_[0]; }

 private:
  int degree_;
  std::vector<Complex> values_;
};

PartialsTable eval_all_partials(const BivariatePoly& f, const Point2& p);

/// t -> f(p + t u).
UnivariatePoly restrict_to_line(const BivariatePoly& f, const Point2& p, const Direction2& u);

/// Restriction for a polynomial that has already been shifted to p.
UnivariatePoly restrict_shifted(const BivariatePoly& shifted, const Direction2& u);

/// The unitary map
///   x = (e^{i theta} X + e^{-i psi} Y) / sqrt(2)
///   y = (e^{i psi}   X - e^{-i theta} Y) / sqrt(2).
/// Its inverse is the same family at (-theta, psi).
struct UnitaryMap {
  double theta = 0.0;
  double psi = 0.0;

  Complex xx() const;  // dx/dX
  Complex xy() const;  // dx/dY
  Complex yx() const;  // dy/dX
  Complex yy() const;  // dy/dY

  Point2 apply(const Point2& q) const;
  UnitaryMap inverse() const { return {-theta, psi}; }
};

/// F(X, Y) = f(U(X, Y)).
BivariatePoly rotate_unitary(const BivariatePoly& f, double theta, double psi);

/// f(a X + b Y, c X + d Y).
BivariatePoly substitute_linear(const BivariatePoly& f, Complex a, Complex b, Complex c,
                                Complex d);

/// n! for 0 <= n <= kMaxDegree.
double factorial(int n);
/// C(n, k) in double precision.
double binomial(int n, int k);

}  // namespace vdist
