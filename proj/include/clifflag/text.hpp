#pragma once

#include <cctype>
#include <cstddef>
#include <string>
#include <string_view>

#include "clifflag/polynomial.hpp"

namespace clifflag {

/// `e` followed by the ascending generator indices, or `1` for the unit.
inline std::string blade_name(BladeMask mask) {
  if (mask == 0) return "1";
  std::string out = "e";
  for (int bit = 0; mask != 0; ++bit, mask >>= 1)
    if (mask & 1u) out += std::to_string(bit + 1);
  return out;
}

namespace detail {

// Renders "coeff blade" terms in bitmask order with the given scalar printer.
template <typename ScalarFormat>
std::string format_terms(const Multivector& x, ScalarFormat&& fmt) {
  std::string out;
  for (BladeMask b = 0; b < x.size(); ++b) {
    const Rational& c = x[b];
    if (is_zero(c)) continue;
    const bool negative = sgn(c) < 0;
    if (out.empty())
      out += negative ? "-" : "";
    else
      out += negative ? " - " : " + ";
    const Rational mag = abs(c);
    if (b == 0)
      out += fmt(mag);
    else if (mag == 1)
      out += blade_name(b);
    else
      out += fmt(mag) + " " + blade_name(b);
  }
  return out.empty() ? "0" : out;
}

class Cursor {
 public:
  explicit Cursor(std::string_view s) : s_(s) {}

  void skip_ws() {
    while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
  }
  bool done() {
    skip_ws();
    return pos_ >= s_.size();
  }
  char peek() {
    skip_ws();
    return pos_ < s_.size() ? s_[pos_] : '\0';
  }
  char raw_peek() const { return pos_ < s_.size() ? s_[pos_] : '\0'; }
  bool accept(char c) {
    if (peek() != c) return false;
    ++pos_;
    return true;
  }
  void expect(char c) {
    if (!accept(c)) fail(std::string("expected '") + c + "'");
  }
  std::string digits() {
    std::size_t start = pos_;
    while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
    return std::string(s_.substr(start, pos_ - start));
  }
  void advance() { ++pos_; }
  std::size_t pos() const noexcept { return pos_; }
  std::string_view rest() const { return s_.substr(pos_); }

  [[noreturn]] void fail(const std::string& why) const {
    throw Error(errc::parse_error, why + " at offset " + std::to_string(pos_) + " in '" + std::string(s_) + "'");
  }

 private:
  std::string_view s_;
  std::size_t pos_ = 0;
};

inline BladeMask parse_blade(Cursor& cur, const Signature& sig) {
  const char c = cur.peek();
  if (c == 'i' || c == 'j' || c == 'k') {
    if (!sig.is_quaternion()) cur.fail("quaternion unit outside signature (0,2)");
    cur.advance();
    return c == 'i' ? blade::e1 : c == 'j' ? blade::e2 : blade::e12;
  }
  cur.expect('e');
  std::string idx = cur.digits();
  if (idx.empty()) cur.fail("blade needs generator indices");
  BladeMask mask = 0;
  int last = 0;
  for (char d : idx) {
    int g = d - '0';
    if (g <= last) cur.fail("blade indices must be strictly ascending");
    if (g > sig.dim()) cur.fail("generator e" + std::to_string(g) + " outside signature " + sig.str());
    mask |= BladeMask{1} << (g - 1);
    last = g;
  }
  return mask;
}

inline bool starts_blade(char c) { return c == 'e' || c == 'i' || c == 'j' || c == 'k'; }

inline Multivector parse_multivector(Cursor& cur, const Signature& sig) {
  Multivector out(sig);
  bool first = true;
  for (;;) {
    const char c = cur.peek();
    bool negative = false;
    if (c == '+' || c == '-') {
      negative = c == '-';
      cur.advance();
    } else if (!first) {
      break;
    }
    Rational coeff = 1;
    bool have_coeff = false;
    if (std::isdigit(static_cast<unsigned char>(cur.peek()))) {
      std::string lit = cur.digits();
      if (cur.raw_peek() == '/') {
        cur.advance();
        std::string den = cur.digits();
        if (den.empty()) cur.fail("missing denominator");
        lit += "/" + den;
      }
      coeff = parse_rational(lit);
      have_coeff = true;
      cur.accept('*');
    }
    BladeMask mask = 0;
    if (starts_blade(cur.peek())) {
      mask = parse_blade(cur, sig);
    } else if (!have_coeff) {
      cur.fail("expected a rational or a blade");
    }
    if (negative) coeff = -coeff;
    out[mask] += coeff;
    first = false;
  }
  return out;
}

}  // namespace detail

/// Canonical text: blades in bitmask order, e.g. `3/2 + e1 - 2 e23 + 1/5 e123`.
inline std::string to_string(const Multivector& x) {
  return detail::format_terms(x, [](const Rational& r) { return r.get_str(); });
}

/// Like to_string but with `digits`-place decimal scalars; approximate.
inline std::string to_decimal_string(const Multivector& x, std::size_t digits) {
  return detail::format_terms(x, [digits](const Rational& r) { return to_decimal(r, digits); });
}

inline Multivector parse_multivector(std::string_view text, const Signature& sig) {
  detail::Cursor cur(text);
  if (cur.done()) cur.fail("empty multivector literal");
  Multivector x = detail::parse_multivector(cur, sig);
  if (!cur.done()) cur.fail("trailing input");
  return x;
}

namespace detail {

template <typename CoeffFormat>
std::string format_polynomial(const Polynomial& p, CoeffFormat&& fmt) {
  if (p.is_zero()) return "0";
  std::string out;
  const auto& cs = p.coeffs();
  for (std::size_t h = cs.size(); h-- > 0;) {
    if (cs[h].is_zero()) continue;
    if (!out.empty()) out += " + ";
    if (h >= 2)
      out += "X^" + std::to_string(h) + "*";
    else if (h == 1)
      out += "X*";
    out += "(" + fmt(cs[h]) + ")";
  }
  return out;
}

}  // namespace detail

/// Canonical text, descending degree: `X^3*(e12) + X^2*(1) + (1)`.
inline std::string to_string(const Polynomial& p) {
  return detail::format_polynomial(p, [](const Multivector& c) { return to_string(c); });
}

inline std::string to_decimal_string(const Polynomial& p, std::size_t digits) {
  return detail::format_polynomial(p, [digits](const Multivector& c) { return to_decimal_string(c, digits); });
}

/// Accepts terms `X^h*(mv)`, `X*(mv)`, `X^h`, `X`, `(mv)` joined by + or -.
inline Polynomial parse_polynomial(std::string_view text, const Signature& sig) {
  detail::Cursor cur(text);
  if (cur.done()) cur.fail("empty polynomial");
  Polynomial out(sig);
  if (cur.peek() == '0') {
    cur.advance();
    if (!cur.done()) cur.fail("trailing input after zero polynomial");
    return out;
  }
  bool first = true;
  while (!cur.done()) {
    bool negative = false;
    if (cur.accept('+')) {
    } else if (cur.accept('-')) {
      negative = true;
    } else if (!first) {
      cur.fail("expected '+' or '-' between terms");
    }
    std::size_t power = 0;
    bool has_x = false;
    if (cur.accept('X')) {
      has_x = true;
      power = 1;
      if (cur.accept('^')) {
        cur.skip_ws();
        std::string exp = cur.digits();
        if (exp.empty()) cur.fail("missing exponent");
        power = std::stoul(exp);
      }
    }
    Multivector coeff = Multivector::scalar(sig, 1);
    const bool star = has_x && cur.accept('*');
    if (cur.peek() == '(') {
      cur.advance();
      coeff = detail::parse_multivector(cur, sig);
      cur.expect(')');
    } else if (!has_x || star) {
      cur.fail("expected '(' multivector ')'");
    }
    if (negative) coeff = -coeff;
    out += Polynomial::monomial(power, coeff);
    first = false;
  }
  return out;
}

}  // namespace clifflag
