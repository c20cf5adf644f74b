#pragma once

#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "vdist/polynomial.hpp"

namespace vdist {

/// Syntax error with the byte offset where parsing stopped and what would have been accepted there.
class ParseError : public std::runtime_error {
 public:
  ParseError(std::size_t offset, std::vector<std::string> expected, const std::string& detail = {});

  std::size_t offset() const { return offset_; }
  const std::vector<std::string>& expected() const { return expected_; }

 private:
  std::size_t offset_;
  std::vector<std::string> expected_;
};

enum class TokenKind { Number, Imaginary, X, Y, Plus, Minus, Star, Caret, LParen, RParen };

struct Token {
  TokenKind kind;
  std::size_t offset;
  std::size_t length;
};

struct ParsedExpression {
  std::string source;
  std::vector<Token> tokens;
  BivariatePoly poly;
};

/// Parses expressions such as "x^2 + y^2 - 1" or "(1+2i)*x*y^2".
///
///   expr    := term (('+' | '-') term)*
///   term    := unary ('*' unary)*
///   unary   := ('+' | '-') unary | power
///   power   := primary ('^' integer)?
///   primary := number | number 'i' | 'i' | 'x' | 'y' | '(' expr ')'
///
/// Multiplication must be explicit; `2i` is an imaginary literal, `2 x` is an error.
/// Exponents above kMaxDegree raise ParseError.
ParsedExpression parse_poly(std::string_view text);

/// Expression text that parse_poly maps back to exactly the same coefficients.
std::string to_expression(const BivariatePoly& f);

}  // namespace vdist
