#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "clifflag/lagrange.hpp"
#include "clifflag/linear_solve.hpp"

namespace clifflag {

struct OracleResult {
  enum class Kind { unique_solution, no_solution, affine_family };

  Kind kind = Kind::no_solution;
  std::optional<std::size_t> max_degree;  // degree bound the system was built for
  std::optional<Polynomial> solution;     // the solution, or one member of the family
  std::size_t nullity = 0;                // dimension of the family over R
};

/// Default degree bound: d = -1 + sum min(d_j, 2) in H, m - 1 otherwise.
inline std::optional<std::size_t> theorem_degree(const InterpolationProblem& problem) {
  if (problem.pairs.empty()) return std::nullopt;
  if (problem.sig.is_quaternion()) return detail::group_points(problem).degree;
  return problem.pairs.size() - 1;
}

/// Solves sum_h x^h a_h = w for all pairs as one real linear system in the
/// 2^m (D+1) coordinates of a_0..a_D. Independent of the Lagrange route.
inline OracleResult brute_force_interpolate(const InterpolationProblem& problem,
                                            std::optional<std::size_t> max_degree = std::nullopt) {
  const Signature sig = problem.sig;
  if (!max_degree) max_degree = theorem_degree(problem);
  OracleResult out;
  out.max_degree = max_degree;
  if (problem.pairs.empty()) {
    out.kind = OracleResult::Kind::affine_family;
    out.solution = Polynomial(sig);
    return out;
  }
  const std::size_t n = sig.size();
  const std::size_t terms = *max_degree + 1;
  Matrix system(problem.pairs.size() * n, terms * n);
  std::vector<Rational> rhs(problem.pairs.size() * n);
  for (std::size_t i = 0; i < problem.pairs.size(); ++i) {
    const auto& [x, w] = problem.pairs[i];
    require_same(sig, x.signature());
    require_same(sig, w.signature());
    Multivector power = Multivector::scalar(sig, 1);
    for (std::size_t h = 0; h < terms; ++h) {
      for (BladeMask c = 0; c < n; ++c) {
        Multivector column = power * Multivector::blade(sig, c);
        for (BladeMask r = 0; r < n; ++r) system(i * n + r, h * n + c) = column[r];
      }
      power = power * x;
    }
    for (BladeMask r = 0; r < n; ++r) rhs[i * n + r] = w[r];
  }

  SolveResult solved = solve_linear(std::move(system), std::move(rhs));
  out.nullity = solved.nullity;
  if (solved.status == SolveStatus::none) {
    out.kind = OracleResult::Kind::no_solution;
    return out;
  }
  std::vector<Multivector> coeffs;
  for (std::size_t h = 0; h < terms; ++h)
    coeffs.emplace_back(sig, std::vector<Rational>(solved.solution.begin() + h * n, solved.solution.begin() + (h + 1) * n));
  out.solution = Polynomial(sig, std::move(coeffs));
  out.kind = solved.status == SolveStatus::unique ? OracleResult::Kind::unique_solution
                                                  : OracleResult::Kind::affine_family;
  return out;
}

}  // namespace clifflag
