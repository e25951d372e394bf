#pragma once

#include <cstddef>
#include <string>

#include "clifflag/error.hpp"

namespace clifflag {

inline constexpr int kHardMaxDimension = 6;

/// Signature (p, q) of the real Clifford algebra R_{p,q}: generators
/// e_1..e_p square to +1, e_{p+1}..e_{p+q} square to -1.
struct Signature {
  int p = 0;
  int q = 0;

  constexpr int dim() const noexcept { return p + q; }
  constexpr std::size_t size() const noexcept { return std::size_t{1} << dim(); }

  /// Square of generator e_{bit+1}.
  constexpr int metric(int bit) const noexcept { return bit < p ? 1 : -1; }

  constexpr bool is_quaternion() const noexcept { return p == 0 && q == 2; }
  constexpr bool is_r03() const noexcept { return p == 0 && q == 3; }

  friend constexpr bool operator==(const Signature&, const Signature&) = default;

  std::string str() const { return "(" + std::to_string(p) + "," + std::to_string(q) + ")"; }

  static Signature make(int p, int q, int cap = kHardMaxDimension) {
    if (p < 0 || q < 0) throw Error(errc::dimension_cap, "negative signature entry");
    if (cap > kHardMaxDimension) cap = kHardMaxDimension;
    if (p + q > cap)
      throw Error(errc::dimension_cap, "p+q=" + std::to_string(p + q) + " exceeds cap " + std::to_string(cap));
    return Signature{p, q};
  }
};

inline constexpr Signature kQuaternion{0, 2};
inline constexpr Signature kR03{0, 3};

inline void require_same(const Signature& a, const Signature& b) {
  if (!(a == b)) throw Error(errc::signature_mismatch, a.str() + " vs " + b.str());
}

}  // namespace clifflag
