#pragma once

#include <gmpxx.h>

#include <cstddef>
#include <string>
#include <string_view>

#include "clifflag/error.hpp"

namespace clifflag {

// Exact scalar. GMP keeps mpq values canonical (reduced, positive
// denominator) across arithmetic; only construction from a raw num/den pair
// needs an explicit canonicalize().
using Rational = mpq_class;

inline Rational make_rational(long num, long den = 1) {
  if (den == 0) throw Error(errc::parse_error, "zero denominator");
  Rational r(num, den);
  r.canonicalize();
  return r;
}

inline bool is_zero(const Rational& r) { return sgn(r) == 0; }

inline std::string to_string(const Rational& r) { return r.get_str(); }

/// Parses `n` or `n/d` with an optional leading sign.
inline Rational parse_rational(std::string_view text) {
  std::string s(text);
  if (s.empty()) throw Error(errc::parse_error, "empty rational literal");
  Rational r;
  if (r.set_str(s, 10) != 0)
    throw Error(errc::parse_error, "bad rational literal '" + s + "'");
  if (sgn(r.get_den()) == 0) throw Error(errc::parse_error, "zero denominator in '" + s + "'");
  r.canonicalize();
  return r;
}

/// True when r = s^2 for some rational s; writes s >= 0 to `root`.
inline bool rational_sqrt(const Rational& r, Rational& root) {
  if (sgn(r) < 0) return false;
  mpz_class n = r.get_num(), d = r.get_den();
  if (!mpz_perfect_square_p(n.get_mpz_t()) || !mpz_perfect_square_p(d.get_mpz_t())) return false;
  mpz_class sn, sd;
  mpz_sqrt(sn.get_mpz_t(), n.get_mpz_t());
  mpz_sqrt(sd.get_mpz_t(), d.get_mpz_t());
  root = Rational(sn, sd);
  root.canonicalize();
  return true;
}

/// Fixed-point rendering with `digits` fractional digits, rounded half away
/// from zero. Approximate by construction; callers must label it as such.
inline std::string to_decimal(const Rational& r, std::size_t digits) {
  mpz_class scale;
  mpz_ui_pow_ui(scale.get_mpz_t(), 10, digits);
  mpz_class num = abs(r.get_num()) * scale * 2 + r.get_den();
  mpz_class den = r.get_den() * 2;
  mpz_class q;
  mpz_fdiv_q(q.get_mpz_t(), num.get_mpz_t(), den.get_mpz_t());
  std::string body = q.get_str();
  if (digits > 0) {
    if (body.size() <= digits) body.insert(0, digits + 1 - body.size(), '0');
    body.insert(body.size() - digits, ".");
  }
  bool negative = sgn(r) < 0 && q != 0;
  return negative ? "-" + body : body;
}

}  // namespace clifflag
