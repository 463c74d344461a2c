#pragma once

#include <cctype>
#include <cstddef>
#include <string>
#include <string_view>

#include "orbmeas/errors.hpp"
#include "orbmeas/polynomial.hpp"

namespace orbmeas::cli {

/// Recursive-descent parser for
///   expr     := ['+'|'-'] term (('+'|'-') term)*
///   term     := factor ('*' factor)*
///   factor   := base ('^' uint)?
///   base     := rational | var | '(' expr ')'
///   var      := 'x' index          (1-based)
///   rational := int ('/' uint)?    (int may carry a leading '-')
/// Whitespace is insignificant; implicit multiplication is rejected.
/// Error positions are 1-based offsets into `text`.
class PolynomialParser {
 public:
  PolynomialParser(std::string_view text, std::size_t nvars) : text_(text), nvars_(nvars) {
    if (nvars == 0 || nvars > kMaxVars) throw DomainError("unsupported number of variables");
  }

  Polynomial parse() {
    skip_ws();
    if (at_end()) throw ParseError("empty polynomial", pos_ + 1);
    Polynomial p = expr();
    skip_ws();
    if (!at_end()) throw ParseError(std::string("unexpected '") + text_[pos_] + "'", pos_ + 1);
    return p;
  }

 private:
  bool at_end() const { return pos_ >= text_.size(); }
  char peek() const { return at_end() ? '\0' : text_[pos_]; }

  void skip_ws() {
    while (!at_end() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }

  Polynomial expr() {
    skip_ws();
    bool negate = false;
    if (peek() == '+' || peek() == '-') {
      // A '-' directly before digits belongs to the rational literal.
      const bool literal = peek() == '-' && pos_ + 1 < text_.size() &&
                           std::isdigit(static_cast<unsigned char>(text_[pos_ + 1]));
      if (!literal) {
        negate = peek() == '-';
        ++pos_;
      }
    }
    Polynomial acc = term();
    if (negate) acc = -acc;
    for (;;) {
      skip_ws();
      const char c = peek();
      if (c != '+' && c != '-') break;
      ++pos_;
      Polynomial t = term();
      if (c == '+')
        acc += t;
      else
        acc -= t;
    }
    return acc;
  }

  Polynomial term() {
    Polynomial acc = factor();
    for (;;) {
      skip_ws();
      if (peek() != '*') {
        if (!at_end() && (std::isalnum(static_cast<unsigned char>(peek())) || peek() == '('))
          throw ParseError("implicit multiplication is not supported", pos_ + 1);
        break;
      }
      ++pos_;
      acc = acc * factor();
    }
    return acc;
  }

  Polynomial factor() {
    Polynomial b = base();
    skip_ws();
    if (peek() == '^') {
      ++pos_;
      skip_ws();
      const std::size_t start = pos_;
      const std::string digits = read_digits();
      if (digits.empty()) throw ParseError("expected exponent", pos_ + 1);
      if (digits.size() > 3 || std::stoul(digits) > static_cast<unsigned long>(kMaxDegree))
        throw ParseError("exponent exceeds 64", start + 1);
      const unsigned e = static_cast<unsigned>(std::stoul(digits));
      if (!b.is_zero() && b.degree() * static_cast<int>(e) > kMaxDegree)
        throw ParseError("degree exceeds 64", start + 1);
      b = pow(b, e);
    }
    return b;
  }

  Polynomial base() {
    skip_ws();
    const std::size_t start = pos_;
    const char c = peek();
    if (c == '(') {
      ++pos_;
      Polynomial inner = expr();
      skip_ws();
      if (peek() != ')') throw ParseError("expected ')'", pos_ + 1);
      ++pos_;
      return inner;
    }
    if (c == 'x') {
      ++pos_;
      const std::string digits = read_digits();
      if (digits.empty()) throw ParseError("expected variable index", pos_ + 1);
      const unsigned long idx = digits.size() > 3 ? 1000 : std::stoul(digits);
      if (idx == 0 || idx > nvars_) throw ParseError("variable index out of range", start + 1);
      return Polynomial::variable(nvars_, idx - 1);
    }
    if (c == '-' || std::isdigit(static_cast<unsigned char>(c))) {
      std::string num;
      if (c == '-') {
        num = "-";
        ++pos_;
      }
      const std::string digits = read_digits();
      if (digits.empty()) throw ParseError("expected number", pos_ + 1);
      num += digits;
      std::size_t save = pos_;
      skip_ws();
      if (peek() == '/') {
        ++pos_;
        skip_ws();
        const std::size_t den_start = pos_;
        const std::string den = read_digits();
        if (den.empty()) throw ParseError("expected denominator", pos_ + 1);
        if (den.find_first_not_of('0') == std::string::npos) throw ParseError("zero denominator", den_start + 1);
        num += "/" + den;
      } else {
        pos_ = save;
      }
      return Polynomial::constant(nvars_, parse_rational(num));
    }
    if (at_end()) throw ParseError("unexpected end of input", pos_ + 1);
    throw ParseError(std::string("unexpected '") + c + "'", pos_ + 1);
  }

  std::string read_digits() {
    std::string d;
    while (!at_end() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) d += text_[pos_++];
    return d;
  }

  std::string_view text_;
  std::size_t nvars_;
  std::size_t pos_ = 0;
};

inline Polynomial parse_polynomial(std::string_view text, std::size_t nvars) {
  return PolynomialParser(text, nvars).parse();
}

}  // namespace orbmeas::cli
