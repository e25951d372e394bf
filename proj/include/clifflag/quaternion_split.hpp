#pragma once

#include <utility>

#include "clifflag/algebra.hpp"

namespace clifflag {

/// Images of x in R_{0,3} under the central idempotents (1 +- e123)/2,
/// written in the quaternion basis 1, i = e1, j = e2, k = e12 via
///   e3 -> -+k,  e13 -> +-j,  e23 -> -+i,  e123 -> +-1.
struct HPair {
  Multivector plus;
  Multivector minus;

  friend bool operator==(const HPair&, const HPair&) = default;
};

inline HPair split_h_plus_h(const Multivector& x) {
  if (!x.signature().is_r03())
    throw Error(errc::wrong_signature, "split_h_plus_h expects R_{0,3}, got " + x.signature().str());
  using namespace blade;
  Multivector plus(kQuaternion), minus(kQuaternion);
  plus[e0] = x[e0] + x[e123];
  plus[e1] = x[e1] - x[e23];
  plus[e2] = x[e2] + x[e13];
  plus[e12] = x[e12] - x[e3];
  minus[e0] = x[e0] - x[e123];
  minus[e1] = x[e1] + x[e23];
  minus[e2] = x[e2] - x[e13];
  minus[e12] = x[e12] + x[e3];
  return {std::move(plus), std::move(minus)};
}

inline Multivector merge_h_plus_h(const Multivector& plus, const Multivector& minus) {
  if (!plus.signature().is_quaternion() || !minus.signature().is_quaternion())
    throw Error(errc::wrong_signature, "merge_h_plus_h expects two quaternions");
  using namespace blade;
  const Rational half(1, 2);
  Multivector x(kR03);
  x[e0] = (plus[e0] + minus[e0]) * half;
  x[e123] = (plus[e0] - minus[e0]) * half;
  x[e1] = (plus[e1] + minus[e1]) * half;
  x[e23] = (minus[e1] - plus[e1]) * half;
  x[e2] = (plus[e2] + minus[e2]) * half;
  x[e13] = (plus[e2] - minus[e2]) * half;
  x[e12] = (plus[e12] + minus[e12]) * half;
  x[e3] = (minus[e12] - plus[e12]) * half;
  return x;
}

inline Multivector merge_h_plus_h(const HPair& pair) { return merge_h_plus_h(pair.plus, pair.minus); }

}  // namespace clifflag
