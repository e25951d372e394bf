#pragma once

#include <cstddef>
#include <optional>
#include <utility>
#include <vector>

#include "clifflag/conjugacy.hpp"

namespace clifflag {

/// Polynomial sum_h X^h a_h with coefficients written on the right of the
/// indeterminate. X commutes with coefficients under the star product.
class Polynomial {
 public:
  explicit Polynomial(Signature sig) : sig_(sig) {}

  Polynomial(Signature sig, std::vector<Multivector> coeffs) : sig_(sig), coeffs_(std::move(coeffs)) {
    for (const auto& c : coeffs_) require_same(sig_, c.signature());
    trim();
  }

  static Polynomial constant(const Multivector& c) { return Polynomial(c.signature(), {c}); }

  /// X^power * c.
  static Polynomial monomial(std::size_t power, const Multivector& c) {
    std::vector<Multivector> coeffs(power + 1, Multivector(c.signature()));
    coeffs[power] = c;
    return Polynomial(c.signature(), std::move(coeffs));
  }

  /// X - y.
  static Polynomial linear(const Multivector& y) {
    const Signature sig = y.signature();
    return Polynomial(sig, {-y, Multivector::scalar(sig, 1)});
  }

  /// Polynomial with real coefficients c_0..c_d.
  static Polynomial real(Signature sig, const std::vector<Rational>& coeffs) {
    std::vector<Multivector> cs;
    cs.reserve(coeffs.size());
    for (const auto& c : coeffs) cs.push_back(Multivector::scalar(sig, c));
    return Polynomial(sig, std::move(cs));
  }

  const Signature& signature() const noexcept { return sig_; }
  const std::vector<Multivector>& coeffs() const noexcept { return coeffs_; }

  /// Degree, or nullopt for the zero polynomial.
  std::optional<std::size_t> degree() const {
    if (coeffs_.empty()) return std::nullopt;
    return coeffs_.size() - 1;
  }

  bool is_zero() const noexcept { return coeffs_.empty(); }

  /// Coefficient of X^h (zero beyond the degree).
  Multivector coeff(std::size_t h) const { return h < coeffs_.size() ? coeffs_[h] : Multivector(sig_); }

  bool has_real_coefficients() const {
    for (const auto& c : coeffs_)
      if (!c.is_real()) return false;
    return true;
  }

  Polynomial& operator+=(const Polynomial& o) {
    require_same(sig_, o.sig_);
    if (o.coeffs_.size() > coeffs_.size()) coeffs_.resize(o.coeffs_.size(), Multivector(sig_));
    for (std::size_t h = 0; h < o.coeffs_.size(); ++h) coeffs_[h] += o.coeffs_[h];
    trim();
    return *this;
  }
  Polynomial& operator-=(const Polynomial& o) {
    require_same(sig_, o.sig_);
    if (o.coeffs_.size() > coeffs_.size()) coeffs_.resize(o.coeffs_.size(), Multivector(sig_));
    for (std::size_t h = 0; h < o.coeffs_.size(); ++h) coeffs_[h] -= o.coeffs_[h];
    trim();
    return *this;
  }

  friend Polynomial operator+(Polynomial a, const Polynomial& b) { return a += b; }
  friend Polynomial operator-(Polynomial a, const Polynomial& b) { return a -= b; }

  /// Right scalar multiplication: coefficients a_h -> a_h c.
  friend Polynomial operator*(const Polynomial& p, const Multivector& c) {
    require_same(p.sig_, c.signature());
    std::vector<Multivector> out;
    out.reserve(p.coeffs_.size());
    for (const auto& a : p.coeffs_) out.push_back(a * c);
    return Polynomial(p.sig_, std::move(out));
  }

  friend bool operator==(const Polynomial& a, const Polynomial& b) {
    return a.sig_ == b.sig_ && a.coeffs_ == b.coeffs_;
  }

 private:
  void trim() {
    while (!coeffs_.empty() && coeffs_.back().is_zero()) coeffs_.pop_back();
  }

  Signature sig_;
  std::vector<Multivector> coeffs_;
};

/// P(x) = sum_h x^h a_h, powers of x on the left (Horner from the top).
inline Multivector eval(const Polynomial& p, const Multivector& x) {
  require_same(p.signature(), x.signature());
  Multivector acc(x.signature());
  const auto& cs = p.coeffs();
  for (std::size_t h = cs.size(); h-- > 0;) acc = x * acc + cs[h];
  return acc;
}

/// P . Q: X commutes with coefficients, so X^n carries sum_{h+k=n} a_h b_k.
inline Polynomial star_product(const Polynomial& p, const Polynomial& q) {
  require_same(p.signature(), q.signature());
  const Signature sig = p.signature();
  if (p.is_zero() || q.is_zero()) return Polynomial(sig);
  std::vector<Multivector> out(p.coeffs().size() + q.coeffs().size() - 1, Multivector(sig));
  for (std::size_t h = 0; h < p.coeffs().size(); ++h)
    for (std::size_t k = 0; k < q.coeffs().size(); ++k) out[h + k] += p.coeffs()[h] * q.coeffs()[k];
  return Polynomial(sig, std::move(out));
}

/// Right-hand side of (P . Q)(x) = P(x) Q(P(x)^-1 x P(x)); throws
/// NotInvertible when P(x) is a zero divisor.
inline Multivector eval_of_product(const Polynomial& p, const Polynomial& q, const Multivector& x) {
  Multivector px = eval(p, x);
  Multivector px_inv = inverse(px);
  return px * eval(q, px_inv * x * px);
}

struct LinearDivision {
  Polynomial quotient;
  Multivector remainder;
};

/// P = (X - y) . Q + r with r = P(y).
inline LinearDivision left_divide_linear(const Polynomial& p, const Multivector& y) {
  require_same(p.signature(), y.signature());
  const Signature sig = p.signature();
  if (!p.degree() || *p.degree() < 1) throw Error(errc::wrong_signature, "left_divide_linear needs degree >= 1");
  const auto& a = p.coeffs();
  const std::size_t d = a.size() - 1;
  // c_{d-1} = a_d, c_{k-1} = a_k + y c_k; the remainder is a_0 + y c_0.
  std::vector<Multivector> c(d, Multivector(sig));
  c[d - 1] = a[d];
  for (std::size_t k = d - 1; k > 0; --k) c[k - 1] = a[k] + y * c[k];
  Multivector r = a[0] + y * c[0];
  return {Polynomial(sig, std::move(c)), std::move(r)};
}

struct RealDivision {
  Polynomial quotient;
  Polynomial remainder;
};

/// Long division by a polynomial with real coefficients. Real coefficients
/// commute with everything, so P = D . Q + R = Q . D + R.
inline RealDivision divide_by_real(const Polynomial& p, const Polynomial& divisor) {
  require_same(p.signature(), divisor.signature());
  if (divisor.is_zero() || !divisor.has_real_coefficients())
    throw Error(errc::wrong_signature, "divisor must be a nonzero polynomial with real coefficients");
  const Signature sig = p.signature();
  const std::size_t dd = *divisor.degree();
  const Rational lead = divisor.coeffs().back().scalar_part();
  std::vector<Multivector> rem = p.coeffs();
  if (rem.size() <= dd) return {Polynomial(sig), p};
  std::vector<Multivector> quot(rem.size() - dd, Multivector(sig));
  for (std::size_t top = rem.size(); top-- > dd;) {
    Multivector factor = rem[top] / lead;
    if (factor.is_zero()) continue;
    for (std::size_t i = 0; i <= dd; ++i) rem[top - dd + i] -= factor * divisor.coeffs()[i].scalar_part();
    quot[top - dd] = std::move(factor);
  }
  rem.erase(rem.begin() + static_cast<std::ptrdiff_t>(dd), rem.end());
  return {Polynomial(sig, std::move(quot)), Polynomial(sig, std::move(rem))};
}

/// S = T . (X - T(y)^-1 y T(y)): vanishes wherever T does, and at y.
inline Polynomial append_root(const Polynomial& t, const Multivector& y) {
  Multivector ty = eval(t, y);
  auto ty_inv = try_inverse(ty);
  if (!ty_inv) throw Error(errc::not_invertible, "T(y) is zero or a zero divisor");
  return star_product(t, Polynomial::linear(*ty_inv * y * ty));
}

/// Builds 1 . (X - r_1') . (X - r_2') ... vanishing on the given roots, in order.
template <typename Range>
Polynomial vanishing_polynomial(Signature sig, const Range& roots) {
  Polynomial p = Polynomial::constant(Multivector::scalar(sig, 1));
  for (const auto& y : roots) p = append_root(p, y);
  return p;
}

/// X^2 - X t + n for a sphere class, X - alpha for a real one.
inline Polynomial characteristic_poly(const ClassId& c, Signature sig) {
  if (c.is_real()) return Polynomial::real(sig, {-c.as_real().alpha, 1});
  const auto& s = c.as_sphere();
  return Polynomial::real(sig, {s.n, -s.t, 1});
}

}  // namespace clifflag
