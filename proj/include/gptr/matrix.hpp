#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include "gptr/rational.hpp"

namespace gptr {

/// Dense row-major matrix of exact rationals.
class Matrix {
 public:
  Matrix() = default;
  Matrix(std::size_t rows, std::size_t cols);
  /// Builds from a list of equally long rows; `cols` is only used when `rows` is empty.
  static Matrix from_rows(const std::vector<Vector>& rows, std::size_t cols = 0);
  static Matrix identity(std::size_t n);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }

  Rational& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  const Rational& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

  std::span<Rational> row(std::size_t r) { return {data_.data() + r * cols_, cols_}; }
  std::span<const Rational> row(std::size_t r) const { return {data_.data() + r * cols_, cols_}; }
  Vector row_vector(std::size_t r) const;
  Vector column(std::size_t c) const;

  void append_row(std::span<const Rational> values);

  Matrix transpose() const;
  Vector operator*(std::span<const Rational> x) const;
  /// yᵀ·M
  Vector left_multiply(std::span<const Rational> y) const;

  bool operator==(const Matrix&) const = default;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Rational> data_;
};

/// Exact rank by fraction-free (Bareiss) elimination on an integer-scaled copy.
std::size_t rank(const Matrix& m);

struct LinearSolveResult {
  bool consistent = false;
  /// Particular solution with every free variable set to zero (empty when inconsistent).
  Vector solution;
  bool underdetermined = false;
};

/// Solves m·x = rhs exactly.
LinearSolveResult solve_linear(const Matrix& m, std::span<const Rational> rhs);

/// Basis of {x : m·x = 0}.
std::vector<Vector> nullspace(const Matrix& m);

/// A maximal linearly independent subset of `vectors`, as indices in input order.
std::vector<std::size_t> independent_subset(const std::vector<Vector>& vectors);

}  // namespace gptr
