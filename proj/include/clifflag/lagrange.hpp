#pragma once

#include <algorithm>
#include <cstddef>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "clifflag/polynomial.hpp"
#include "clifflag/text.hpp"

namespace clifflag {

struct DataPoint {
  Multivector point;
  Multivector value;
};

struct InterpolationProblem {
  Signature sig;
  std::vector<DataPoint> pairs;
};

struct ClassGroup {
  ClassId cls;
  std::vector<std::size_t> members;  // indices into InterpolationProblem::pairs

  std::size_t size() const noexcept { return members.size(); }
  /// d_j' = min(d_j, 2).
  std::size_t reduced_size() const noexcept { return std::min<std::size_t>(members.size(), 2); }
};

struct ClassGrouping {
  std::vector<ClassGroup> groups;  // singleton classes first, then first-appearance order
  std::optional<std::size_t> degree;  // d = -1 + sum d_j'; none for an empty problem
};

namespace detail {

inline void require_interpolation_signature(const Signature& sig) {
  if (!sig.is_quaternion() && !sig.is_r03())
    throw Error(errc::unsupported_signature, "interpolation supports (0,2) and (0,3), got " + sig.str());
}

// Groups without the R_{0,3} one-point-per-class restriction.
inline ClassGrouping group_points(const InterpolationProblem& problem) {
  require_interpolation_signature(problem.sig);
  std::vector<ClassGroup> groups;
  for (std::size_t i = 0; i < problem.pairs.size(); ++i) {
    const auto& [x, w] = problem.pairs[i];
    require_same(problem.sig, x.signature());
    require_same(problem.sig, w.signature());
    for (std::size_t j = 0; j < i; ++j)
      if (problem.pairs[j].point == x)
        throw Error(errc::duplicate_point, "points " + std::to_string(j) + " and " + std::to_string(i) + " coincide");
    if (!in_quadratic_cone(x))
      throw Error(errc::point_not_in_cone, "point " + std::to_string(i) + " (" + to_string(x) + ") is outside the cone");
    ClassId cls = class_of(x);
    auto it = std::find_if(groups.begin(), groups.end(), [&](const ClassGroup& g) { return g.cls == cls; });
    if (it == groups.end())
      groups.push_back({std::move(cls), {i}});
    else
      it->members.push_back(i);
  }
  std::stable_partition(groups.begin(), groups.end(), [](const ClassGroup& g) { return g.size() == 1; });
  ClassGrouping out{std::move(groups), std::nullopt};
  std::size_t total = 0;
  for (const auto& g : out.groups) total += g.reduced_size();
  if (total > 0) out.degree = total - 1;
  return out;
}

}  // namespace detail

/// Validates the problem and groups its points by conjugacy class.
inline ClassGrouping group_by_class(const InterpolationProblem& problem) {
  ClassGrouping grouping = detail::group_points(problem);
  if (problem.sig.is_r03()) {
    for (const auto& g : grouping.groups) {
      if (g.size() > 1)
        throw Error(errc::multi_point_class_in_r03,
                    "points " + std::to_string(g.members[0]) + " and " + std::to_string(g.members[1]) +
                        " share class " + g.cls.str());
    }
  }
  return grouping;
}

struct CollinearityCheck {
  std::optional<std::size_t> violation;  // 1-based member position h >= 3
  std::optional<Multivector> slope;       // (x_2 - x_1)^-1 (w_2 - w_1) when the group has >= 2 members

  bool ok() const noexcept { return !violation.has_value(); }
};

/// Checks (x_h - x_1)^-1 (w_h - w_1) == (x_2 - x_1)^-1 (w_2 - w_1) for h >= 3.
inline CollinearityCheck check_collinearity(const InterpolationProblem& problem, const ClassGroup& group) {
  CollinearityCheck out;
  if (group.size() < 2) return out;
  const auto& first = problem.pairs[group.members[0]];
  auto slope_to = [&](std::size_t member) {
    const auto& other = problem.pairs[group.members[member]];
    return inverse(other.point - first.point) * (other.value - first.value);
  };
  out.slope = slope_to(1);
  for (std::size_t h = 2; h < group.size(); ++h) {
    if (!(slope_to(h) == *out.slope)) {
      out.violation = h + 1;
      break;
    }
  }
  return out;
}

/// One Lagrange basis polynomial and the pieces it was assembled from.
struct LagrangeTerm {
  std::size_t index;        // data point where the basis polynomial equals 1
  Polynomial vanishing;     // built by successive root appending
  Polynomial unnormalized;  // real characteristic factors . vanishing
  Polynomial basis;         // unnormalized * unnormalized(x_index)^-1
};

namespace detail {

inline LagrangeTerm make_term(const InterpolationProblem& problem, std::size_t index, Polynomial vanishing,
                              const Polynomial& real_factor) {
  Polynomial unnormalized = star_product(real_factor, vanishing);
  auto scale = try_inverse(eval(unnormalized, problem.pairs[index].point));
  if (!scale)
    throw Error(errc::internal_non_invertible, "basis polynomial is not invertible at point " + std::to_string(index));
  Polynomial basis = unnormalized * *scale;
  return {index, std::move(vanishing), std::move(unnormalized), std::move(basis)};
}

inline Polynomial vanishing_on(const InterpolationProblem& problem, const std::vector<std::size_t>& indices) {
  Polynomial p = Polynomial::constant(Multivector::scalar(problem.sig, 1));
  for (std::size_t i : indices) {
    try {
      p = append_root(p, problem.pairs[i].point);
    } catch (const Error& e) {
      if (e.code() != errc::not_invertible) throw;
      throw Error(errc::internal_non_invertible, "root appending failed at point " + std::to_string(i));
    }
  }
  return p;
}

}  // namespace detail

/// Quaternionic Lagrange basis: one term per singleton class and two per
/// multi-point class (its first two members are the anchors).
inline std::vector<LagrangeTerm> lagrange_basis_quaternion(const InterpolationProblem& problem,
                                                           const ClassGrouping& grouping) {
  std::vector<std::size_t> singles;
  std::vector<const ClassGroup*> multis;
  for (const auto& g : grouping.groups) {
    if (g.size() == 1)
      singles.push_back(g.members[0]);
    else
      multis.push_back(&g);
  }
  auto delta_except = [&](const ClassGroup* skip) {
    Polynomial d = Polynomial::constant(Multivector::scalar(problem.sig, 1));
    for (const ClassGroup* g : multis)
      if (g != skip) d = star_product(d, characteristic_poly(g->cls, problem.sig));
    return d;
  };

  std::vector<LagrangeTerm> terms;
  const Polynomial all_deltas = delta_except(nullptr);
  for (std::size_t j : singles) {
    std::vector<std::size_t> others;
    for (std::size_t i : singles)
      if (i != j) others.push_back(i);
    terms.push_back(detail::make_term(problem, j, detail::vanishing_on(problem, others), all_deltas));
  }
  for (const ClassGroup* g : multis) {
    const Polynomial deltas = delta_except(g);
    const std::size_t first = g->members[0], second = g->members[1];
    std::vector<std::size_t> roots = singles;
    roots.push_back(second);
    terms.push_back(detail::make_term(problem, first, detail::vanishing_on(problem, roots), deltas));
    roots.back() = first;
    terms.push_back(detail::make_term(problem, second, detail::vanishing_on(problem, roots), deltas));
  }
  return terms;
}

/// R_{0,3} Lagrange basis: L_j vanishes on every other point, in input order.
inline std::vector<LagrangeTerm> lagrange_basis_r03(const InterpolationProblem& problem) {
  const Polynomial one = Polynomial::constant(Multivector::scalar(problem.sig, 1));
  std::vector<LagrangeTerm> terms;
  for (std::size_t j = 0; j < problem.pairs.size(); ++j) {
    std::vector<std::size_t> others;
    for (std::size_t i = 0; i < problem.pairs.size(); ++i)
      if (i != j) others.push_back(i);
    terms.push_back(detail::make_term(problem, j, detail::vanishing_on(problem, others), one));
  }
  return terms;
}

namespace detail {

inline Polynomial combine(const InterpolationProblem& problem, const std::vector<LagrangeTerm>& terms) {
  Polynomial p(problem.sig);
  for (const auto& term : terms) p += term.basis * problem.pairs[term.index].value;
  return p;
}

}  // namespace detail

/// Interpolation over H. Classes with three or more points must satisfy the
/// collinearity condition; otherwise throws CollinearityError.
inline Polynomial interpolate_quaternion(const InterpolationProblem& problem) {
  if (!problem.sig.is_quaternion())
    throw Error(errc::wrong_signature, "interpolate_quaternion expects (0,2), got " + problem.sig.str());
  const ClassGrouping grouping = group_by_class(problem);
  for (std::size_t j = 0; j < grouping.groups.size(); ++j) {
    const auto& g = grouping.groups[j];
    if (g.size() < 3) continue;
    CollinearityCheck check = check_collinearity(problem, g);
    if (!check.ok()) {
      const std::size_t h = *check.violation;
      throw CollinearityError(j + 1, h,
                              "class " + g.cls.str() + " (group " + std::to_string(j + 1) + ", representative " +
                                  to_string(problem.pairs[g.members[0]].point) + "): member " + std::to_string(h) +
                                  " (point " + std::to_string(g.members[h - 1]) + ") breaks the common slope");
    }
  }
  return detail::combine(problem, lagrange_basis_quaternion(problem, grouping));
}

/// Interpolation over R_{0,3}; points must lie in pairwise distinct classes.
inline Polynomial interpolate_r03(const InterpolationProblem& problem) {
  if (!problem.sig.is_r03())
    throw Error(errc::wrong_signature, "interpolate_r03 expects (0,3), got " + problem.sig.str());
  group_by_class(problem);
  return detail::combine(problem, lagrange_basis_r03(problem));
}

inline Polynomial interpolate(const InterpolationProblem& problem) {
  if (problem.sig.is_quaternion()) return interpolate_quaternion(problem);
  if (problem.sig.is_r03()) return interpolate_r03(problem);
  throw Error(errc::unsupported_signature, "interpolation supports (0,2) and (0,3), got " + problem.sig.str());
}

/// True iff P(x) == w exactly at every data point.
inline bool verify_interpolant(const Polynomial& p, const InterpolationProblem& problem) {
  for (const auto& [x, w] : problem.pairs)
    if (!(eval(p, x) == w)) return false;
  return true;
}

}  // namespace clifflag
