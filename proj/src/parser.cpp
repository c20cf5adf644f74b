#include "vdist/parser.hpp"

#include <cctype>
#include <cmath>
#include <charconv>
#include <cstdio>

namespace vdist {

namespace {

std::string join(const std::vector<std::string>& items) {
  std::string s;
  for (std::size_t n = 0; n < items.size(); ++n) {
    if (n) s += n + 1 == items.size() ? " or " : ", ";
    s += items[n];
  }
  return s;
}

const std::vector<std::string> kOperand = {"number", "'i'", "'x'", "'y'", "'('", "'+'", "'-'"};

struct Lexeme {
  Token token;
  double number = 0.0;
};

std::vector<Lexeme> tokenize(std::string_view src) {
  std::vector<Lexeme> out;
  std::size_t pos = 0;
  while (pos < src.size()) {
    const char ch = src[pos];
    if (std::isspace(static_cast<unsigned char>(ch))) {
      ++pos;
      continue;
    }
    const std::size_t start = pos;
    auto single = [&](TokenKind k) {
      out.push_back({{k, start, 1}});
      ++pos;
    };
    switch (ch) {
      case '+': single(TokenKind::Plus); continue;
      case '-': single(TokenKind::Minus); continue;
      case '*': single(TokenKind::Star); continue;
      case '^': single(TokenKind::Caret); continue;
      case '(': single(TokenKind::LParen); continue;
      case ')': single(TokenKind::RParen); continue;
      case 'x': single(TokenKind::X); continue;
      case 'y': single(TokenKind::Y); continue;
      case 'i': out.push_back({{TokenKind::Imaginary, start, 1}, 1.0}); ++pos; continue;
      default: break;
    }
    if (std::isdigit(static_cast<unsigned char>(ch)) || ch == '.') {
      // digits [. digits] [e [+-] digits]
      auto digits = [&] {
        std::size_t n = 0;
        while (pos < src.size() && std::isdigit(static_cast<unsigned char>(src[pos]))) ++pos, ++n;
        return n;
      };
      std::size_t mantissa = digits();
      if (pos < src.size() && src[pos] == '.') {
        ++pos;
        mantissa += digits();
      }
      if (mantissa == 0) throw ParseError(start, {"digit"});
      if (pos < src.size() && (src[pos] == 'e' || src[pos] == 'E')) {
        ++pos;
        if (pos < src.size() && (src[pos] == '+' || src[pos] == '-')) ++pos;
        if (digits() == 0) throw ParseError(pos, {"exponent digits"});
      }
      double value = 0.0;
      const auto res = std::from_chars(src.data() + start, src.data() + pos, value);
      if (res.ec != std::errc() || res.ptr != src.data() + pos)
        throw ParseError(start, {"number"}, "numeric literal out of range");
      if (pos < src.size() && src[pos] == 'i') {
        ++pos;
        out.push_back({{TokenKind::Imaginary, start, pos - start}, value});
      } else {
        out.push_back({{TokenKind::Number, start, pos - start}, value});
      }
      continue;
    }
    throw ParseError(start, kOperand, std::string("unexpected character '") + ch + "'");
  }
  return out;
}

class Parser {
 public:
  Parser(std::string_view src, const std::vector<Lexeme>& lex) : src_(src), lex_(lex) {}

  BivariatePoly parse() {
    BivariatePoly r = expr();
    if (pos_ < lex_.size())
      throw ParseError(offset(), {"'+'", "'-'", "'*'", "'^'", "end of input"});
    return r;
  }

 private:
  bool at(TokenKind k) const { return pos_ < lex_.size() && lex_[pos_].token.kind == k; }
  std::size_t offset() const { return pos_ < lex_.size() ? lex_[pos_].token.offset : src_.size(); }

  BivariatePoly expr() {
    BivariatePoly acc = term();
    while (at(TokenKind::Plus) || at(TokenKind::Minus)) {
      const bool minus = at(TokenKind::Minus);
      ++pos_;
      BivariatePoly rhs = term();
      acc = minus ? acc - rhs : acc + rhs;
    }
    return acc;
  }

  BivariatePoly term() {
    BivariatePoly acc = unary();
    while (at(TokenKind::Star)) {
      const std::size_t where = lex_[pos_].token.offset;
      ++pos_;
      BivariatePoly rhs = unary();
      if (!acc.is_zero() && !rhs.is_zero() && acc.degree() + rhs.degree() > kMaxDegree)
        throw ParseError(where, {}, "product exceeds the maximum total degree");
      acc = acc * rhs;
    }
    return acc;
  }

  BivariatePoly unary() {
    if (at(TokenKind::Minus)) {
      ++pos_;
      return -unary();
    }
    if (at(TokenKind::Plus)) {
      ++pos_;
      return unary();
    }
    return power();
  }

  BivariatePoly power() {
    BivariatePoly base = primary();
    if (!at(TokenKind::Caret)) return base;
    ++pos_;
    if (!at(TokenKind::Number)) throw ParseError(offset(), {"integer"});
    const Token& tok = lex_[pos_].token;
    const std::string_view text = src_.substr(tok.offset, tok.length);
    unsigned long exponent = 0;
    const auto res = std::from_chars(text.data(), text.data() + text.size(), exponent);
    if (res.ec == std::errc::result_out_of_range)
      throw ParseError(tok.offset, {"integer <= " + std::to_string(kMaxDegree)}, "exponent overflow");
    if (res.ec != std::errc() || res.ptr != text.data() + text.size())
      throw ParseError(tok.offset, {"integer"});
    if (exponent > static_cast<unsigned long>(kMaxDegree) ||
        (!base.is_zero() && exponent * static_cast<unsigned long>(base.degree()) >
                                static_cast<unsigned long>(kMaxDegree)))
      throw ParseError(tok.offset, {"integer <= " + std::to_string(kMaxDegree)}, "exponent overflow");
    ++pos_;
    BivariatePoly r = BivariatePoly::constant(1.0);
    for (unsigned long n = 0; n < exponent; ++n) r = r * base;
    return r;
  }

  BivariatePoly primary() {
    if (pos_ >= lex_.size()) throw ParseError(src_.size(), kOperand);
    const Lexeme& lx = lex_[pos_];
    switch (lx.token.kind) {
      case TokenKind::Number: ++pos_; return BivariatePoly::constant(lx.number);
      case TokenKind::Imaginary: ++pos_; return BivariatePoly::constant(Complex(0.0, lx.number));
      case TokenKind::X: ++pos_; return BivariatePoly::monomial(1.0, 1, 0);
      case TokenKind::Y: ++pos_; return BivariatePoly::monomial(1.0, 0, 1);
      case TokenKind::LParen: {
        ++pos_;
        BivariatePoly inner = expr();
        if (!at(TokenKind::RParen)) throw ParseError(offset(), {"')'", "'+'", "'-'", "'*'", "'^'"});
        ++pos_;
        return inner;
      }
      default: throw ParseError(lx.token.offset, kOperand);
    }
  }

  std::string_view src_;
  const std::vector<Lexeme>& lex_;
  std::size_t pos_ = 0;
};

std::string number(double v) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

}  // namespace

ParseError::ParseError(std::size_t offset, std::vector<std::string> expected,
                       const std::string& detail)
    : std::runtime_error("syntax error at offset " + std::to_string(offset) +
                         (detail.empty() ? "" : ": " + detail) +
                         (expected.empty() ? "" : "; expected " + join(expected))),
      offset_(offset),
      expected_(std::move(expected)) {}

ParsedExpression parse_poly(std::string_view text) {
  const std::vector<Lexeme> lex = tokenize(text);
  ParsedExpression out;
  out.source = std::string(text);
  out.tokens.reserve(lex.size());
  for (const Lexeme& l : lex) out.tokens.push_back(l.token);
  out.poly = Parser(text, lex).parse();
  return out;
}

std::string to_expression(const BivariatePoly& f) {
  if (f.is_zero()) return "0";
  std::string s;
  for (int k = 0; k <= f.degree(); ++k)
    for (int i = k; i >= 0; --i) {
      const Complex c = f.coeff(i, k - i);
      if (c == Complex(0.0)) continue;
      if (!s.empty()) s += " + ";
      const double im = c.imag();
      s += "(" + number(c.real()) + (std::signbit(im) ? "-" : "+") + number(std::abs(im)) + "i)";
      if (i > 0) s += "*x^" + std::to_string(i);
      if (k - i > 0) s += "*y^" + std::to_string(k - i);
    }
  return s;
}

}  // namespace vdist
