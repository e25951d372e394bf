#pragma once

#include <string>
#include <variant>

#include "clifflag/algebra.hpp"

namespace clifflag {

/// Conjugacy class of a cone element: a real singleton {alpha}, or the
/// sphere {alpha + beta K : K in S} labelled by its trace t and norm n.
class ClassId {
 public:
  struct Real {
    Rational alpha;
    friend bool operator==(const Real&, const Real&) = default;
  };
  struct Sphere {
    Rational t;
    Rational n;
    friend bool operator==(const Sphere&, const Sphere&) = default;
  };

  static ClassId real(Rational alpha) { return ClassId(Real{std::move(alpha)}); }

  static ClassId sphere(Rational t, Rational n) {
    if (!(4 * n > t * t)) throw Error(errc::not_in_cone, "sphere class requires 4n > t^2");
    return ClassId(Sphere{std::move(t), std::move(n)});
  }

  /// The class S of imaginary units.
  static ClassId unit_sphere() { return sphere(0, 1); }

  bool is_real() const noexcept { return std::holds_alternative<Real>(v_); }
  bool is_sphere() const noexcept { return std::holds_alternative<Sphere>(v_); }
  const Real& as_real() const { return std::get<Real>(v_); }
  const Sphere& as_sphere() const { return std::get<Sphere>(v_); }

  /// Trace and norm shared by all class members (for Real: 2 alpha, alpha^2).
  Rational trace() const { return is_real() ? 2 * as_real().alpha : as_sphere().t; }
  Rational norm() const { return is_real() ? as_real().alpha * as_real().alpha : as_sphere().n; }

  std::string str() const {
    if (is_real()) return "real(" + to_string(as_real().alpha) + ")";
    return "sphere(t=" + to_string(as_sphere().t) + ", n=" + to_string(as_sphere().n) + ")";
  }

  friend bool operator==(const ClassId&, const ClassId&) = default;

 private:
  explicit ClassId(std::variant<Real, Sphere> v) : v_(std::move(v)) {}
  std::variant<Real, Sphere> v_;
};

/// Class label of a cone element. For (0,2) and (0,3) this identifies the
/// conjugacy class; in other signatures it is only the (t, n) label.
inline ClassId class_of(const Multivector& x) {
  if (!in_quadratic_cone(x)) throw Error(errc::not_in_cone, "element is outside the quadratic cone");
  if (x.is_real()) return ClassId::real(x.scalar_part());
  return ClassId::sphere(trace(x).scalar_part(), norm(x).scalar_part());
}

inline bool same_class(const Multivector& x, const Multivector& y) { return class_of(x) == class_of(y); }

/// True when x is a cone element of class c.
inline bool belongs_to(const Multivector& x, const ClassId& c) {
  return in_quadratic_cone(x) && class_of(x) == c;
}

}  // namespace clifflag
