#pragma once

// Canonical text form of polynomials: terms in descending graded-lex order,
// each as `c*a0^e0*...*x1^f` with the coefficient as `p/q` or an integer.
// parse_poly accepts the same grammar (whitespace-insensitive).

#include <cctype>
#include <sstream>
#include <stdexcept>
#include <string>
#include <string_view>

#include "binform/poly.hpp"

namespace binform {

inline std::string monomial_to_string(const Monomial& m) {
  std::string s;
  for (int i = 0; i < kVarCount; ++i) {
    int e = m.e[i];
    if (e == 0) continue;
    if (!s.empty()) s += '*';
    s += kVarNames[i];
    if (e > 1) {
      s += '^';
      s += std::to_string(e);
    }
  }
  return s;
}

inline std::string poly_to_string(const Poly& p) {
  if (p.is_zero()) return "0";
  std::string out;
  bool first = true;
  for (const auto& [m, c] : p.sorted_terms()) {
    Rational a = c;
    if (first) {
      if (a < 0) {
        out += '-';
        a = -a;
      }
      first = false;
    } else {
      out += (a < 0) ? '-' : '+';
      if (a < 0) a = -a;
    }
    std::string mono = monomial_to_string(m);
    if (mono.empty()) {
      out += a.get_str();
    } else if (a == 1) {
      out += mono;
    } else {
      out += a.get_str();
      out += '*';
      out += mono;
    }
  }
  return out;
}

namespace detail {

class PolyParser {
 public:
  explicit PolyParser(std::string_view text) : s_(text) {}

  Poly parse() {
    Poly acc;
    skip_ws();
    bool neg = consume_sign();
    acc += parse_term(neg);
    skip_ws();
    while (pos_ < s_.size()) {
      char c = s_[pos_];
      if (c != '+' && c != '-') fail("expected '+' or '-'");
      ++pos_;
      skip_ws();
      acc += parse_term(c == '-');
      skip_ws();
    }
    return acc;
  }

 private:
  Poly parse_term(bool negate) {
    Poly t = parse_factor();
    skip_ws();
    while (pos_ < s_.size() && s_[pos_] == '*') {
      ++pos_;
      skip_ws();
      t = t * parse_factor();
      skip_ws();
    }
    return negate ? -t : t;
  }

  Poly parse_factor() {
    skip_ws();
    if (pos_ >= s_.size()) fail("unexpected end of input");
    if (std::isdigit(static_cast<unsigned char>(s_[pos_]))) {
      return Poly::constant(parse_rational());
    }
    if (std::isalpha(static_cast<unsigned char>(s_[pos_]))) {
      std::size_t start = pos_;
      while (pos_ < s_.size() &&
             (std::isalnum(static_cast<unsigned char>(s_[pos_]))))
        ++pos_;
      std::string name(s_.substr(start, pos_ - start));
      int idx = var_index_of(name);
      if (idx == kVarCount) fail("unknown variable '" + name + "'");
      int exp = 1;
      skip_ws();
      if (pos_ < s_.size() && s_[pos_] == '^') {
        ++pos_;
        skip_ws();
        exp = parse_small_int();
      }
      return Poly::variable(static_cast<Var>(idx), exp);
    }
    fail("unexpected character");
    return Poly();  // unreachable
  }

  // Coefficients are arbitrary-precision; exponents must fit a small int.
  Rational parse_rational() {
    Integer num = parse_integer();
    skip_ws();
    if (pos_ < s_.size() && s_[pos_] == '/') {
      ++pos_;
      skip_ws();
      Integer den = parse_integer();
      if (den == 0) fail("zero denominator");
      Rational r(num, den);
      r.canonicalize();
      return r;
    }
    return Rational(num);
  }

  Integer parse_integer() {
    skip_ws();
    std::size_t start = pos_;
    while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_])))
      ++pos_;
    if (start == pos_) fail("expected an integer");
    return Integer(std::string(s_.substr(start, pos_ - start)));
  }

  int parse_small_int() {
    Integer v = parse_integer();
    if (v < 0 || v > 255) fail("exponent out of range");
    return static_cast<int>(v.get_si());
  }

  bool consume_sign() {
    if (pos_ < s_.size() && (s_[pos_] == '+' || s_[pos_] == '-')) {
      bool neg = s_[pos_] == '-';
      ++pos_;
      skip_ws();
      return neg;
    }
    return false;
  }

  void skip_ws() {
    while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_])))
      ++pos_;
  }

  [[noreturn]] void fail(const std::string& msg) {
    throw std::invalid_argument("parse error at position " +
                                std::to_string(pos_) + ": " + msg);
  }

  std::string_view s_;
  std::size_t pos_ = 0;
};

}  // namespace detail

inline Poly parse_poly(std::string_view text) {
  return detail::PolyParser(text).parse();
}

}  // namespace binform
