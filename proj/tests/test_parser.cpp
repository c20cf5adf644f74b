#include <doctest.h>

#include "vdist/parser.hpp"
#include "vdist/random.hpp"

using namespace vdist;

TEST_CASE("parses the documented examples") {
  const ParsedExpression e = parse_poly("x^2 + y^2 - 1");
  CHECK(e.poly.degree() == 2);
  CHECK(e.poly.coeff(2, 0) == Complex(1.0));
  CHECK(e.poly.coeff(0, 2) == Complex(1.0));
  CHECK(e.poly.coeff(0, 0) == Complex(-1.0));
  CHECK(e.poly.coeff(1, 1) == Complex(0.0));
  CHECK(e.tokens.size() == 9);
  CHECK(e.source == "x^2 + y^2 - 1");

  const BivariatePoly c = parse_poly("(1+2i)*x").poly;
  CHECK(c.degree() == 1);
  CHECK(c.coeff(1, 0) == Complex(1.0, 2.0));

  const BivariatePoly m = parse_poly("(1+2i)*x*y^2").poly;
  CHECK(m.coeff(1, 2) == Complex(1.0, 2.0));
}

TEST_CASE("operators, precedence and literals") {
  CHECK(parse_poly("-x^2").poly == -parse_poly("x^2").poly);
  CHECK(parse_poly("2*(x+y)^2").poly == parse_poly("2*x^2 + 4*x*y + 2*y^2").poly);
  CHECK(parse_poly("i*i").poly == parse_poly("-1").poly);
  CHECK(parse_poly("2.5e-1*x").poly.coeff(1, 0) == Complex(0.25));
  CHECK(parse_poly(".5").poly.coeff(0, 0) == Complex(0.5));
  CHECK(parse_poly("3i").poly.coeff(0, 0) == Complex(0.0, 3.0));
  CHECK(parse_poly("x^0").poly == parse_poly("1").poly);
  CHECK(parse_poly("x - x").poly.is_zero());
  CHECK(parse_poly("  x\t*\ny ").poly == BivariatePoly::monomial(1.0, 1, 1));
}

TEST_CASE("token spans") {
  const ParsedExpression e = parse_poly("12.5i*x");
  REQUIRE(e.tokens.size() == 3);
  CHECK(e.tokens[0].kind == TokenKind::Imaginary);
  CHECK(e.tokens[0].offset == 0);
  CHECK(e.tokens[0].length == 5);
  CHECK(e.tokens[2].kind == TokenKind::X);
  CHECK(e.tokens[2].offset == 6);
}

TEST_CASE("syntax errors carry offset and expected tokens") {
  auto error_of = [](const char* text) -> ParseError {
    try {
      parse_poly(text);
    } catch (const ParseError& e) {
      return e;
    }
    FAIL("expected a parse error for " << text);
    return ParseError(0, {});
  };

  const ParseError a = error_of("x^");
  CHECK(a.offset() == 2);
  REQUIRE(a.expected().size() == 1);
  CHECK(a.expected()[0] == "integer");

  CHECK(error_of("2 x").offset() == 2);     // implicit multiplication
  CHECK(error_of("x*").offset() == 2);
  CHECK(error_of("(x+1").offset() == 4);
  CHECK(error_of("x + z").offset() == 4);
  CHECK(error_of("x^1.5").offset() == 2);
  CHECK(error_of("x^-1").offset() == 2);
  CHECK(error_of("").offset() == 0);
  CHECK(error_of("1e").offset() == 2);
  CHECK(error_of(")").offset() == 0);

  const ParseError big = error_of("x^121");
  CHECK(big.offset() == 2);
  CHECK(std::string(big.what()).find("exponent overflow") != std::string::npos);
  CHECK(error_of("(x*y)^61").offset() == 6);
  CHECK_NOTHROW(parse_poly("x^120"));
  CHECK(error_of("x^100*y^21").offset() == 5);
}

TEST_CASE("pretty-print then parse is the identity on coefficients") {
  InstanceGenerator gen(83);
  for (int n = 0; n < 500; ++n) {
    const int degree = gen.uniform_int(0, 9);
    BivariatePoly f = n % 3 == 0 ? gen.real_polynomial(degree) : gen.polynomial(degree);
    if (n % 5 == 0) f = f * parse_poly("x*y - x^2").poly;  // leaves some zero coefficients
    if (n % 7 == 0) f = Complex(std::exp(gen.uniform(-40.0, 40.0))) * f;
    const BivariatePoly back = parse_poly(to_expression(f)).poly;
    CHECK(back == f);
  }
  CHECK(to_expression(BivariatePoly()) == "0");
  CHECK(parse_poly(to_expression(parse_poly("-x + (0-2i)*y").poly)).poly ==
        parse_poly("-x + (0-2i)*y").poly);
}
