#pragma once

#include <algorithm>
#include <array>
#include <cstddef>
#include <optional>
#include <vector>

#include "clifflag/polynomial.hpp"
#include "clifflag/quaternion_split.hpp"

namespace clifflag {

/// P(x) = x a + b for every x in `cls`.
struct AffineRestriction {
  ClassId cls;
  Multivector a;
  Multivector b;
};

/// On a sphere class x^2 = x t - n, so x^h = x B_h + A_h with
/// A_0 = 1, B_0 = 0, A_{h+1} = -n B_h, B_{h+1} = A_h + t B_h.
inline AffineRestriction affine_restriction(const Polynomial& p, const ClassId& cls) {
  const Signature sig = p.signature();
  if (!sig.is_quaternion() && !sig.is_r03())
    throw Error(errc::unsupported_signature, "affine restriction needs (0,2) or (0,3), got " + sig.str());
  if (cls.is_real())
    return {cls, Multivector(sig), eval(p, Multivector::scalar(sig, cls.as_real().alpha))};
  const Rational& t = cls.as_sphere().t;
  const Rational& n = cls.as_sphere().n;
  Multivector a(sig), b(sig);
  Rational alpha = 1, beta = 0;
  for (const auto& coeff : p.coeffs()) {
    a += coeff * beta;
    b += coeff * alpha;
    Rational next_alpha = -n * beta;
    Rational next_beta = alpha + t * beta;
    alpha = std::move(next_alpha);
    beta = std::move(next_beta);
  }
  return {cls, std::move(a), std::move(b)};
}

/// One H-component of an R_{0,3} root family: x = merge(U, fixed) when the
/// plus component is free (U over the quaternion sphere of the same class),
/// or merge(fixed, U) when the minus component is free.
struct RootFamily {
  enum class Free { plus, minus };
  Free free;
  Multivector fixed;
};

/// Roots of a polynomial inside one conjugacy class.
struct RootSet {
  enum class Kind { empty, points, whole_class };

  Kind kind = Kind::empty;
  ClassId cls;
  /// Kind::points: all roots, or sample representatives when `family` is set.
  std::vector<Multivector> points;
  std::optional<RootFamily> family;

  bool exhaustive() const noexcept { return !family.has_value(); }

  bool contains(const Multivector& x) const {
    switch (kind) {
      case Kind::empty:
        return false;
      case Kind::whole_class:
        return belongs_to(x, cls);
      case Kind::points:
        break;
    }
    if (!family) return std::find(points.begin(), points.end(), x) != points.end();
    if (!x.signature().is_r03() || !belongs_to(x, cls)) return false;
    HPair parts = split_h_plus_h(x);
    return family->free == RootFamily::Free::plus ? parts.minus == family->fixed : parts.plus == family->fixed;
  }
};

namespace detail {

struct ComponentRoots {
  enum class Kind { none, point, whole } kind;
  Multivector point;
};

// Solves X a + b = 0 for a quaternion X in the sphere class `cls`.
inline ComponentRoots solve_quaternion_affine(const Multivector& a, const Multivector& b, const ClassId& cls) {
  if (a.is_zero()) {
    return {b.is_zero() ? ComponentRoots::Kind::whole : ComponentRoots::Kind::none, Multivector(kQuaternion)};
  }
  Multivector x = -(b * inverse(a));
  if (belongs_to(x, cls)) return {ComponentRoots::Kind::point, std::move(x)};
  return {ComponentRoots::Kind::none, Multivector(kQuaternion)};
}

// Rational sample points u m u^-1 of the quaternion class of m.
inline std::vector<Multivector> quaternion_class_samples(const Multivector& m) {
  using namespace blade;
  std::vector<Multivector> out;
  const std::array<std::array<int, 4>, 7> rotors{{
      {1, 0, 0, 0}, {0, 1, 0, 0}, {0, 0, 1, 0}, {0, 0, 0, 1}, {1, 1, 0, 0}, {1, 0, 1, 0}, {1, 0, 0, 1}}};
  for (const auto& r : rotors) {
    Multivector u(kQuaternion);
    u[e0] = r[0];
    u[e1] = r[1];
    u[e2] = r[2];
    u[e12] = r[3];
    out.push_back(u * m * inverse(u));
  }
  return out;
}

}  // namespace detail

/// Roots of P inside `cls`, found by solving the affine restriction x a + b = 0.
/// In R_{0,3} the equation splits into two quaternionic equations; when one
/// side is a whole sphere and the other a single point, the result is a
/// 2-sphere family reported through sample points plus `family`.
inline RootSet roots_in_class(const Polynomial& p, const ClassId& cls) {
  const Signature sig = p.signature();
  if (!sig.is_quaternion() && !sig.is_r03())
    throw Error(errc::unsupported_signature, "roots_in_class needs (0,2) or (0,3), got " + sig.str());
  RootSet out{RootSet::Kind::empty, cls, {}, std::nullopt};

  if (cls.is_real()) {
    Multivector x = Multivector::scalar(sig, cls.as_real().alpha);
    if (eval(p, x).is_zero()) {
      out.kind = RootSet::Kind::points;
      out.points.push_back(std::move(x));
    }
    return out;
  }

  const AffineRestriction ar = affine_restriction(p, cls);

  if (sig.is_quaternion()) {
    auto sol = detail::solve_quaternion_affine(ar.a, ar.b, cls);
    if (sol.kind == detail::ComponentRoots::Kind::whole) {
      out.kind = RootSet::Kind::whole_class;
    } else if (sol.kind == detail::ComponentRoots::Kind::point) {
      out.kind = RootSet::Kind::points;
      out.points.push_back(std::move(sol.point));
    }
    return out;
  }

  // A cone element of R_{0,3} lies in (t, n) iff both components lie in the
  // quaternion class (t, n).
  const HPair a = split_h_plus_h(ar.a);
  const HPair b = split_h_plus_h(ar.b);
  auto plus = detail::solve_quaternion_affine(a.plus, b.plus, cls);
  auto minus = detail::solve_quaternion_affine(a.minus, b.minus, cls);
  using CK = detail::ComponentRoots::Kind;
  if (plus.kind == CK::none || minus.kind == CK::none) return out;
  if (plus.kind == CK::whole && minus.kind == CK::whole) {
    out.kind = RootSet::Kind::whole_class;
    return out;
  }
  out.kind = RootSet::Kind::points;
  if (plus.kind == CK::point && minus.kind == CK::point) {
    out.points.push_back(merge_h_plus_h(plus.point, minus.point));
    return out;
  }

  const bool plus_free = plus.kind == CK::whole;
  const Multivector& fixed = plus_free ? minus.point : plus.point;
  out.family = RootFamily{plus_free ? RootFamily::Free::plus : RootFamily::Free::minus, fixed};
  auto assemble = [&](const Multivector& free_part) {
    return plus_free ? merge_h_plus_h(free_part, fixed) : merge_h_plus_h(fixed, free_part);
  };
  // The family has exactly one paravector: the free part mirrors the fixed
  // one with its k-coordinate negated.
  Multivector mirror = fixed;
  mirror[blade::e12] = -mirror[blade::e12];
  out.points.push_back(assemble(mirror));
  for (const auto& sample : detail::quaternion_class_samples(fixed)) {
    Multivector x = assemble(sample);
    if (std::find(out.points.begin(), out.points.end(), x) == out.points.end()) out.points.push_back(std::move(x));
  }
  return out;
}

struct CharDivision {
  std::size_t power = 0;
  Polynomial quotient;
};

/// Largest s with P = Delta_c^s . Q. For a real class Delta_c = X - alpha,
/// so this is also the multiplicity of a real root.
inline CharDivision char_divisibility(const Polynomial& p, const ClassId& cls) {
  CharDivision out{0, p};
  if (p.is_zero()) return out;
  const Polynomial delta = characteristic_poly(cls, p.signature());
  for (;;) {
    RealDivision div = divide_by_real(out.quotient, delta);
    if (!div.remainder.is_zero()) return out;
    out.quotient = std::move(div.quotient);
    ++out.power;
  }
}

struct RootCensus {
  std::size_t real_roots = 0;       // r, with multiplicity
  std::size_t spherical = 0;        // s, sum of Delta exponents
  std::size_t isolated = 0;         // k, non-real non-spherical paravector roots
  std::size_t degree = 0;           // d

  bool within_bound() const noexcept { return real_roots + 2 * spherical + isolated <= degree; }
  bool tight() const noexcept { return real_roots + 2 * spherical + isolated == degree; }
};

/// Paravector root census over caller-supplied rational real roots and classes.
inline RootCensus paravector_root_census(const Polynomial& p, const std::vector<Rational>& real_candidates,
                                         const std::vector<ClassId>& classes) {
  if (!p.degree() || *p.degree() == 0) throw Error(errc::wrong_signature, "census needs positive degree");
  RootCensus census;
  census.degree = *p.degree();

  std::vector<Rational> reals;
  for (const auto& alpha : real_candidates)
    if (std::find(reals.begin(), reals.end(), alpha) == reals.end()) reals.push_back(alpha);
  for (const auto& alpha : reals) census.real_roots += char_divisibility(p, ClassId::real(alpha)).power;

  std::vector<ClassId> seen;
  for (const auto& c : classes) {
    if (!c.is_sphere() || std::find(seen.begin(), seen.end(), c) != seen.end()) continue;
    seen.push_back(c);
    std::size_t s = char_divisibility(p, c).power;
    if (s > 0) {
      census.spherical += s;
      continue;
    }
    RootSet roots = roots_in_class(p, c);
    for (const auto& x : roots.points)
      if (is_paravector(x)) ++census.isolated;
  }
  return census;
}

}  // namespace clifflag
