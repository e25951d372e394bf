#pragma once

#include <cstddef>
#include <utility>
#include <vector>

#include "clifflag/rational.hpp"

namespace clifflag {

/// Dense row-major rational matrix, just enough for exact elimination.
class Matrix {
 public:
  Matrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}

  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return cols_; }

  Rational& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  const Rational& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

 private:
  std::size_t rows_, cols_;
  std::vector<Rational> data_;
};

enum class SolveStatus { unique, none, family };

struct SolveResult {
  SolveStatus status = SolveStatus::none;
  std::vector<Rational> solution;  // particular solution (free variables = 0)
  std::size_t rank = 0;
  std::size_t nullity = 0;
};

/// Exact Gauss-Jordan elimination on [a | b].
inline SolveResult solve_linear(Matrix a, std::vector<Rational> b) {
  const std::size_t rows = a.rows(), cols = a.cols();
  std::vector<std::size_t> pivot_cols;
  std::size_t row = 0;
  for (std::size_t col = 0; col < cols && row < rows; ++col) {
    std::size_t pivot = row;
    while (pivot < rows && is_zero(a(pivot, col))) ++pivot;
    if (pivot == rows) continue;
    if (pivot != row) {
      for (std::size_t c = 0; c < cols; ++c) std::swap(a(pivot, c), a(row, c));
      std::swap(b[pivot], b[row]);
    }
    Rational inv = 1 / a(row, col);
    for (std::size_t c = col; c < cols; ++c) a(row, c) *= inv;
    b[row] *= inv;
    for (std::size_t r = 0; r < rows; ++r) {
      if (r == row || is_zero(a(r, col))) continue;
      Rational f = a(r, col);
      for (std::size_t c = col; c < cols; ++c) a(r, c) -= f * a(row, c);
      b[r] -= f * b[row];
    }
    pivot_cols.push_back(col);
    ++row;
  }

  SolveResult result;
  result.rank = pivot_cols.size();
  result.nullity = cols - result.rank;
  for (std::size_t r = result.rank; r < rows; ++r) {
    if (!is_zero(b[r])) {
      result.status = SolveStatus::none;
      return result;
    }
  }
  result.solution.assign(cols, Rational(0));
  for (std::size_t i = 0; i < pivot_cols.size(); ++i) result.solution[pivot_cols[i]] = b[i];
  result.status = result.nullity == 0 ? SolveStatus::unique : SolveStatus::family;
  return result;
}

}  // namespace clifflag
