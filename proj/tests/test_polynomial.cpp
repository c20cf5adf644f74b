#include <doctest.h>

#include <cmath>
#include <numbers>

#include "support.hpp"
#include "vdist/parser.hpp"
#include "vdist/random.hpp"

using namespace vdist;
using vdist::testing::coeff_distance;
using vdist::testing::rel_err;

namespace {

BivariatePoly P(const char* text) { return parse_poly(text).poly; }

const Complex I(0.0, 1.0);

}  // namespace

TEST_CASE("total degree reads off the largest monomial") {
  CHECK(total_degree(P("x^2+y^2-1")) == 2);
  CHECK(total_degree(P("7")) == 0);
  CHECK(total_degree(P("x^3*y + y^2")) == 4);
  CHECK(total_degree(P("x - x")) == 0);
  CHECK(P("x - x").is_zero());
  CHECK_FALSE(P("7").is_zero());
}

TEST_CASE("normalization drops exactly-zero top coefficients only") {
  BivariateBuilder b(5);
  b.at(1, 1) = 3.0;
  b.at(0, 4) = 1e-300;
  const BivariatePoly f = std::move(b).build();
  CHECK(f.degree() == 4);
  CHECK(f.coeff(1, 1) == Complex(3.0));
  CHECK(f.coeff(5, 0) == Complex(0.0));
}

TEST_CASE("construction limits") {
  CHECK_THROWS_AS(BivariatePoly::monomial(1.0, 100, 21), DegreeLimitError);
  CHECK_NOTHROW(BivariatePoly::monomial(1.0, 100, 20));
  CHECK_THROWS_AS(BivariatePoly::constant(std::nan("")), NonFiniteError);
  CHECK_THROWS_AS(Direction2(1.0, 1.0), std::invalid_argument);
  CHECK_NOTHROW(Direction2(std::polar(1.0, 0.3), 0.0));
  const Direction2 d = Direction2::normalized(3.0, 4.0 * I);
  CHECK(std::norm(d.x()) + std::norm(d.y()) == doctest::Approx(1.0).epsilon(1e-15));
}

TEST_CASE("eval") {
  CHECK(eval(P("x^2+y^2-1"), {0.0, 0.0}) == Complex(-1.0));
  CHECK(eval(P("x"), {1.0 + I, 5.0}) == 1.0 + I);
  CHECK(eval(P("x^3*y + y^2"), {2.0, 3.0}) == Complex(33.0));
}

TEST_CASE("partial derivatives") {
  CHECK(partial(P("x^2+y^2-1"), 2, 0) == P("2"));
  const BivariatePoly f = P("(1+2i)*x^3*y - 4*x*y^2 + y");
  CHECK(partial(f, 0, 0) == f);
  CHECK(partial(P("x^3*y"), 1, 1) == P("3*x^2"));
  CHECK(partial(P("x^3*y"), 3, 2).is_zero());
  CHECK(partial(P("x^3*y"), 0, 2).is_zero());
}

TEST_CASE("taylor shift") {
  CHECK(taylor_shift(P("x^2"), {1.0, 0.0}) == P("x^2 + 2*x + 1"));
  const BivariatePoly f = P("(1+2i)*x^3*y - 4*x*y^2 + y - 3");
  CHECK(taylor_shift(f, {0.0, 0.0}) == f);
  // (x+3)^2 + (y+4)^2 - 1 expanded
  CHECK(taylor_shift(P("x^2+y^2-1"), {3.0, 4.0}) == P("x^2+y^2+6*x+8*y+24"));
}

TEST_CASE("taylor shift agrees with binomial expansion") {
  InstanceGenerator gen(11);
  for (int n = 0; n < 50; ++n) {
    const BivariatePoly f = gen.polynomial(gen.uniform_int(0, 10));
    const Point2 p = gen.point(1.5);
    CHECK(coeff_distance(taylor_shift(f, p), testing::binomial_shift(f, p)) < 1e-12);
  }
}

TEST_CASE("eval_all_partials") {
  SUBCASE("circle at the origin") {
    const PartialsTable t = eval_all_partials(P("x^2+y^2-1"), {0.0, 0.0});
    CHECK(t.at(0, 0) == Complex(-1.0));
    CHECK(t.at(1, 0) == Complex(0.0));
    CHECK(t.at(0, 1) == Complex(0.0));
    CHECK(t.at(2, 0) == Complex(2.0));
    CHECK(t.at(1, 1) == Complex(0.0));
    CHECK(t.at(0, 2) == Complex(2.0));
    CHECK(t.at(3, 0) == Complex(0.0));
  }
  SUBCASE("linear") {
    const Point2 p{2.5 - I, 7.0};
    const PartialsTable t = eval_all_partials(P("x"), p);
    CHECK(t.at(0, 0) == p.x);
    CHECK(t.at(1, 0) == Complex(1.0));
    CHECK(t.at(0, 1) == Complex(0.0));
  }
  SUBCASE("matches repeated differentiation") {
    const BivariatePoly f = P("x^3*y + y^2");
    const Point2 p{1.0, 1.0};
    const PartialsTable t = eval_all_partials(f, p);
    for (int k = 0; k <= 4; ++k)
      for (int i = 0; i <= k; ++i) {
        const Complex want = testing::naive_partial(f, i, k - i, p);
        CHECK(std::abs(t.at(i, k - i) - want) <= 1e-12 * std::max(1.0, std::abs(want)));
      }
  }
}

TEST_CASE("restrict_to_line") {
  const BivariatePoly circle = P("x^2+y^2-1");
  CHECK(restrict_to_line(circle, {0.0, 0.0}, Direction2(1.0, 0.0)) ==
        UnivariatePoly({-1.0, 0.0, 1.0}));

  const UnivariatePoly diag =
      restrict_to_line(circle, {0.0, 0.0}, Direction2::normalized(1.0, 1.0));
  REQUIRE(diag.degree() == 2);
  CHECK(std::abs(diag[0] + 1.0) < 1e-15);
  CHECK(std::abs(diag[1]) < 1e-15);
  CHECK(std::abs(diag[2] - 1.0) < 1e-15);

  const UnivariatePoly asym = restrict_to_line(P("x*y - 1"), {0.0, 0.0}, Direction2(0.0, 1.0));
  CHECK(asym.degree() == 0);
  CHECK(asym[0] == Complex(-1.0));
}

TEST_CASE("rotate_unitary") {
  CHECK(rotate_unitary(P("3-2i"), 0.7, -1.1) == P("3-2i"));

  const BivariatePoly r = rotate_unitary(P("x^2+y^2"), 0.0, 0.0);
  CHECK(coeff_distance(r, P("x^2+y^2")) < 1e-15);

  InstanceGenerator gen(5);
  for (int n = 0; n < 100; ++n) {
    const BivariatePoly f = gen.polynomial(gen.uniform_int(0, 9));
    const double theta = gen.uniform(-4.0, 4.0), psi = gen.uniform(-4.0, 4.0);
    CHECK(total_degree(rotate_unitary(f, theta, psi)) == total_degree(f));
  }
}

TEST_CASE("unitary map") {
  const UnitaryMap u{0.4, -1.3};
  // columns are orthonormal
  CHECK(std::abs(std::norm(u.xx()) + std::norm(u.yx()) - 1.0) < 1e-15);
  CHECK(std::abs(std::conj(u.xx()) * u.xy() + std::conj(u.yx()) * u.yy()) < 1e-15);
  const Point2 q{1.0 + 2.0 * I, -0.5 + I};
  const Point2 back = u.inverse().apply(u.apply(q));
  CHECK(distance(back, q) < 1e-15);
  CHECK(std::abs(u.apply(q).norm() - q.norm()) < 1e-14);
}

// ---------------------------------------------------------------------------
// Properties over random instances

TEST_CASE("first-order partials match central differences") {
  InstanceGenerator gen(101);
  const double h = 1e-5;
  for (int n = 0; n < 200; ++n) {
    const BivariatePoly f = gen.polynomial(gen.uniform_int(1, 8));
    const Point2 p = gen.point(1.0);
    const PartialsTable t = eval_all_partials(f, p);
    const double floor = 1e-3 * std::max(1.0, std::abs(t.value()));
    const Complex fdx = (eval(f, {p.x + h, p.y}) - eval(f, {p.x - h, p.y})) / (2.0 * h);
    const Complex fdy = (eval(f, {p.x, p.y + h}) - eval(f, {p.x, p.y - h})) / (2.0 * h);
    CHECK(testing::rel_err_floor(fdx, t.at(1, 0), floor) <= 1e-6);
    CHECK(testing::rel_err_floor(fdy, t.at(0, 1), floor) <= 1e-6);
  }
}

TEST_CASE("shifted polynomial at the origin is f(p)") {
  InstanceGenerator gen(202);
  for (int n = 0; n < 200; ++n) {
    const BivariatePoly f = gen.polynomial(gen.uniform_int(0, 8));
    const Point2 p = gen.point(2.0);
    const Complex want = testing::naive_eval(f, p);
    CHECK(std::abs(eval(taylor_shift(f, p), {0.0, 0.0}) - eval(f, p)) <=
          1e-12 * std::max(std::abs(want), 1e-3));
  }
}

TEST_CASE("all partials agree with the differentiate-then-evaluate path") {
  InstanceGenerator gen(303);
  for (int n = 0; n < 100; ++n) {
    const BivariatePoly f = gen.polynomial(gen.uniform_int(0, 8));
    const Point2 p = gen.point(1.5);
    const PartialsTable t = eval_all_partials(f, p);
    double worst = 0.0;
    for (int k = 0; k <= f.degree(); ++k)
      for (int i = 0; i <= k; ++i) {
        const Complex want = testing::naive_partial(f, i, k - i, p);
        worst = std::max(worst, testing::rel_err_floor(t.at(i, k - i), want, 1e-3));
      }
    CHECK(worst <= 1e-10);
  }
}

TEST_CASE("line restriction agrees with evaluation along the line") {
  InstanceGenerator gen(404);
  for (int n = 0; n < 100; ++n) {
    const BivariatePoly f = gen.polynomial(gen.uniform_int(1, 8));
    const Point2 p = gen.point(1.0);
    const Direction2 u = Direction2::normalized(gen.in_disk(), gen.in_disk());
    const UnivariatePoly g = restrict_to_line(f, p, u);
    CHECK(g.degree() <= f.degree());
    for (int s = 0; s < 10; ++s) {
      const Complex t = gen.in_disk(1.0);
      const Complex want = eval(f, p + t * u.vector());
      CHECK(testing::rel_err_floor(g.eval(t), want, 1e-3) <= 1e-10);
    }
  }
}

TEST_CASE("inverse rotation restores the coefficients") {
  InstanceGenerator gen(505);
  for (int n = 0; n < 100; ++n) {
    const BivariatePoly f = gen.polynomial(gen.uniform_int(0, 8));
    const UnitaryMap u{gen.uniform(-3.2, 3.2), gen.uniform(-3.2, 3.2)};
    const BivariatePoly there = rotate_unitary(f, u.theta, u.psi);
    const UnitaryMap v = u.inverse();
    const BivariatePoly back = rotate_unitary(there, v.theta, v.psi);
    CHECK(coeff_distance(back, f) <= 1e-10);
    // F(U^{-1} q) = f(q)
    const Point2 q = gen.point(1.0);
    CHECK(testing::rel_err_floor(eval(there, v.apply(q)), eval(f, q), 1e-3) <= 1e-10);
  }
}

TEST_CASE("univariate helpers") {
  const UnivariatePoly g({-1.0, 0.0, 1.0});
  CHECK(g.eval(3.0) == Complex(8.0));
  CHECK(g.derivative() == UnivariatePoly({0.0, 2.0}));
  CHECK(g.derivative(3).is_zero());
  CHECK(g.taylor_shift(1.0) == UnivariatePoly({0.0, 2.0, 1.0}));
  const auto d = g.derivatives_at(3.0);
  REQUIRE(d.size() == 3);
  CHECK(d[0] == Complex(8.0));
  CHECK(d[1] == Complex(6.0));
  CHECK(d[2] == Complex(2.0));
  CHECK(UnivariatePoly({1.0, 0.0, 0.0}).degree() == 0);
}
