#pragma once

#include <optional>

#include "clifflag/linear_solve.hpp"
#include "clifflag/multivector.hpp"

namespace clifflag {

namespace blade {
// Bitmask names for R_{0,3} (and the R_{0,2} subalgebra).
inline constexpr BladeMask e0 = 0, e1 = 1, e2 = 2, e12 = 3, e3 = 4, e13 = 5, e23 = 6, e123 = 7;
}  // namespace blade

namespace detail {
inline void require_r03(const Multivector& x, const char* op) {
  if (!x.signature().is_r03())
    throw Error(errc::wrong_signature, std::string(op) + " is defined on R_{0,3} only, got " + x.signature().str());
}
}  // namespace detail

/// phi(x) = x . (x e123) = 2(x0 x123 - x1 x23 + x2 x13 - x3 x12), R_{0,3} only.
inline Rational phi(const Multivector& x) {
  detail::require_r03(x, "phi");
  using namespace blade;
  return 2 * (x[e0] * x[e123] - x[e1] * x[e23] + x[e2] * x[e13] - x[e3] * x[e12]);
}

inline Rational psi_plus(const Multivector& x) {
  detail::require_r03(x, "psi_plus");
  using namespace blade;
  Rational a = x[e0] + x[e123], b = x[e1] - x[e23], c = x[e2] + x[e13], d = x[e3] - x[e12];
  return a * a + b * b + c * c + d * d;
}

inline Rational psi_minus(const Multivector& x) {
  detail::require_r03(x, "psi_minus");
  using namespace blade;
  Rational a = x[e0] - x[e123], b = x[e1] + x[e23], c = x[e2] - x[e13], d = x[e3] + x[e12];
  return a * a + b * b + c * c + d * d;
}

namespace detail {

// Solves x y = 1 through the left-regular representation.
inline std::optional<Multivector> inverse_by_linear_solve(const Multivector& x) {
  const Signature sig = x.signature();
  const std::size_t n = sig.size();
  Matrix left(n, n);
  for (BladeMask col = 0; col < n; ++col) {
    Multivector image = x * Multivector::blade(sig, col);
    for (BladeMask row = 0; row < n; ++row) left(row, col) = image[row];
  }
  std::vector<Rational> rhs(n);
  rhs[0] = 1;
  SolveResult solved = solve_linear(std::move(left), std::move(rhs));
  if (solved.status != SolveStatus::unique) return std::nullopt;
  return Multivector(sig, std::move(solved.solution));
}

}  // namespace detail

/// Two-sided inverse, or nullopt when x is zero or a zero divisor.
inline std::optional<Multivector> try_inverse(const Multivector& x) {
  if (x.is_zero()) return std::nullopt;
  const Signature sig = x.signature();
  const Multivector xc = conjugate(x);
  const Multivector n = x * xc;
  if (n.is_real()) {
    // x x^c = 0 with x^c != 0 makes x a zero divisor.
    if (is_zero(n.scalar_part())) return std::nullopt;
    return xc / n.scalar_part();
  }
  if (sig.is_r03()) {
    // n(x) = a + b e123 is central and e123^2 = 1, so it is a unit iff a^2 != b^2.
    const Rational& a = n[blade::e0];
    const Rational& b = n[blade::e123];
    Rational det = a * a - b * b;
    if (is_zero(det)) return std::nullopt;
    Multivector n_inv = Multivector::scalar(sig, a / det) - Multivector::blade(sig, blade::e123, b / det);
    return xc * n_inv;
  }
  return detail::inverse_by_linear_solve(x);
}

inline Multivector inverse(const Multivector& x) {
  auto inv = try_inverse(x);
  if (!inv) throw Error(errc::not_invertible, "element is zero or a zero divisor");
  return *std::move(inv);
}

inline bool is_invertible(const Multivector& x) { return try_inverse(x).has_value(); }

/// Quadratic cone by its set definition: R, or t(x), n(x) real with 4n > t^2.
inline bool in_quadratic_cone_general(const Multivector& x) {
  if (x.is_real()) return true;
  Multivector t = trace(x), n = norm(x);
  if (!t.is_real() || !n.is_real()) return false;
  return 4 * n.scalar_part() > t.scalar_part() * t.scalar_part();
}

/// Quadratic cone membership with the closed forms for R_{0,2} (everything)
/// and R_{0,3} (x123 = 0 and phi(x) = 0); other signatures use the set definition.
inline bool in_quadratic_cone(const Multivector& x) {
  const Signature& sig = x.signature();
  if (sig.is_quaternion()) return true;
  if (sig.is_r03()) return is_zero(x[blade::e123]) && is_zero(phi(x));
  return in_quadratic_cone_general(x);
}

}  // namespace clifflag
