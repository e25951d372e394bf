#pragma once

#include <bit>
#include <cstddef>
#include <cstdint>
#include <span>
#include <utility>
#include <vector>

#include "clifflag/rational.hpp"
#include "clifflag/signature.hpp"

namespace clifflag {

using BladeMask = std::uint32_t;

inline int grade_of(BladeMask blade) noexcept { return std::popcount(blade); }

/// Sign of e_a * e_b after reordering into canonical (ascending) form and
/// contracting repeated generators with their squares.
inline int blade_product_sign(const Signature& sig, BladeMask a, BladeMask b) noexcept {
  int swaps = 0;
  for (BladeMask rest = a >> 1; rest != 0; rest >>= 1) swaps += std::popcount(rest & b);
  int sign = (swaps & 1) ? -1 : 1;
  for (BladeMask common = a & b; common != 0; common &= common - 1)
    sign *= sig.metric(std::countr_zero(common));
  return sign;
}

/// Dense element of R_{p,q}. Coordinate `b` multiplies the blade whose
/// generators are the set bits of `b` (bit i <-> e_{i+1}).
class Multivector {
 public:
  explicit Multivector(Signature sig) : sig_(sig), coeffs_(sig.size()) {}

  Multivector(Signature sig, std::vector<Rational> coeffs) : sig_(sig), coeffs_(std::move(coeffs)) {
    if (coeffs_.size() != sig_.size())
      throw Error(errc::signature_mismatch, "coefficient count does not match 2^(p+q)");
  }

  static Multivector scalar(Signature sig, const Rational& value) {
    Multivector x(sig);
    x.coeffs_[0] = value;
    return x;
  }

  static Multivector blade(Signature sig, BladeMask mask, const Rational& value = 1) {
    if (mask >= sig.size()) throw Error(errc::wrong_signature, "blade outside algebra " + sig.str());
    Multivector x(sig);
    x.coeffs_[mask] = value;
    return x;
  }

  const Signature& signature() const noexcept { return sig_; }
  std::size_t size() const noexcept { return coeffs_.size(); }
  std::span<const Rational> coeffs() const noexcept { return coeffs_; }

  const Rational& operator[](BladeMask b) const { return coeffs_[b]; }
  Rational& operator[](BladeMask b) { return coeffs_[b]; }

  bool is_zero() const {
    for (const auto& c : coeffs_)
      if (!clifflag::is_zero(c)) return false;
    return true;
  }

  /// True when every non-scalar coordinate vanishes.
  bool is_real() const {
    for (std::size_t b = 1; b < coeffs_.size(); ++b)
      if (!clifflag::is_zero(coeffs_[b])) return false;
    return true;
  }

  const Rational& scalar_part() const { return coeffs_[0]; }

  Multivector grade(int k) const {
    Multivector out(sig_);
    for (std::size_t b = 0; b < coeffs_.size(); ++b)
      if (grade_of(static_cast<BladeMask>(b)) == k) out.coeffs_[b] = coeffs_[b];
    return out;
  }

  Multivector& operator+=(const Multivector& o) {
    require_same(sig_, o.sig_);
    for (std::size_t b = 0; b < coeffs_.size(); ++b) coeffs_[b] += o.coeffs_[b];
    return *this;
  }
  Multivector& operator-=(const Multivector& o) {
    require_same(sig_, o.sig_);
    for (std::size_t b = 0; b < coeffs_.size(); ++b) coeffs_[b] -= o.coeffs_[b];
    return *this;
  }
  Multivector& operator*=(const Rational& s) {
    for (auto& c : coeffs_) c *= s;
    return *this;
  }
  Multivector& operator/=(const Rational& s) {
    if (clifflag::is_zero(s)) throw Error(errc::not_invertible, "division by zero scalar");
    for (auto& c : coeffs_) c /= s;
    return *this;
  }

  friend Multivector operator+(Multivector a, const Multivector& b) { return a += b; }
  friend Multivector operator-(Multivector a, const Multivector& b) { return a -= b; }
  friend Multivector operator*(Multivector a, const Rational& s) { return a *= s; }
  friend Multivector operator*(const Rational& s, Multivector a) { return a *= s; }
  friend Multivector operator/(Multivector a, const Rational& s) { return a /= s; }
  friend Multivector operator-(Multivector a) {
    for (auto& c : a.coeffs_) c = -c;
    return a;
  }

  /// Geometric (Clifford) product.
  friend Multivector operator*(const Multivector& x, const Multivector& y) {
    require_same(x.sig_, y.sig_);
    Multivector out(x.sig_);
    const auto n = static_cast<BladeMask>(x.coeffs_.size());
    for (BladeMask a = 0; a < n; ++a) {
      if (clifflag::is_zero(x.coeffs_[a])) continue;
      for (BladeMask b = 0; b < n; ++b) {
        if (clifflag::is_zero(y.coeffs_[b])) continue;
        if (blade_product_sign(x.sig_, a, b) > 0)
          out.coeffs_[a ^ b] += x.coeffs_[a] * y.coeffs_[b];
        else
          out.coeffs_[a ^ b] -= x.coeffs_[a] * y.coeffs_[b];
      }
    }
    return out;
  }

  friend bool operator==(const Multivector& a, const Multivector& b) {
    return a.sig_ == b.sig_ && a.coeffs_ == b.coeffs_;
  }

 private:
  Signature sig_;
  std::vector<Rational> coeffs_;
};

inline Multivector product(const Multivector& x, const Multivector& y) { return x * y; }

/// Clifford conjugation: grade k picks up (-1)^(k(k+1)/2), i.e. + - - + + - - + ...
inline Multivector conjugate(const Multivector& x) {
  Multivector out = x;
  for (BladeMask b = 0; b < x.size(); ++b) {
    int k = grade_of(b) % 4;
    if (k == 1 || k == 2) out[b] = -x[b];
  }
  return out;
}

/// t(x) = x + x^c.
inline Multivector trace(const Multivector& x) { return x + conjugate(x); }

/// n(x) = x x^c.
inline Multivector norm(const Multivector& x) { return x * conjugate(x); }

/// Sum of squared coordinates, the Euclidean |x|^2 on R^(2^m).
inline Rational euclidean_norm_sq(const Multivector& x) {
  Rational s = 0;
  for (const auto& c : x.coeffs()) s += c * c;
  return s;
}

/// Span of 1, e_1, ..., e_m.
inline bool is_paravector(const Multivector& x) {
  for (BladeMask b = 0; b < x.size(); ++b)
    if (grade_of(b) > 1 && !is_zero(x[b])) return false;
  return true;
}

}  // namespace clifflag
