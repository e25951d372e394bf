#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace clifflag {

enum class errc {
  signature_mismatch,
  wrong_signature,
  unsupported_signature,
  dimension_cap,
  not_invertible,
  not_in_cone,
  duplicate_point,
  point_not_in_cone,
  multi_point_class_in_r03,
  collinearity_violated,
  internal_non_invertible,
  parse_error,
};

inline const char* to_string(errc code) {
  switch (code) {
    case errc::signature_mismatch: return "SignatureMismatch";
    case errc::wrong_signature: return "WrongSignature";
    case errc::unsupported_signature: return "UnsupportedSignature";
    case errc::dimension_cap: return "DimensionCap";
    case errc::not_invertible: return "NotInvertible";
    case errc::not_in_cone: return "NotInCone";
    case errc::duplicate_point: return "DuplicatePoint";
    case errc::point_not_in_cone: return "PointNotInCone";
    case errc::multi_point_class_in_r03: return "MultiPointClassInR03";
    case errc::collinearity_violated: return "CollinearityViolated";
    case errc::internal_non_invertible: return "InternalNonInvertible";
    case errc::parse_error: return "ParseError";
  }
  return "Unknown";
}

class Error : public std::runtime_error {
 public:
  Error(errc code, const std::string& what)
      : std::runtime_error(std::string(to_string(code)) + ": " + what), code_(code) {}

  errc code() const noexcept { return code_; }

 private:
  errc code_;
};

/// Raised by the quaternionic interpolator when a class with three or more
/// points has values that are not affine on that class. `group` and `index`
/// are 1-based, `index` >= 3 is the first offending member of the group.
class CollinearityError : public Error {
 public:
  CollinearityError(std::size_t group, std::size_t index, const std::string& what)
      : Error(errc::collinearity_violated, what), group_(group), index_(index) {}

  std::size_t group() const noexcept { return group_; }
  std::size_t index() const noexcept { return index_; }

 private:
  std::size_t group_;
  std::size_t index_;
};

}  // namespace clifflag
