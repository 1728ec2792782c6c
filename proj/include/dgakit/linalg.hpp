#pragma once

#include "dgakit/rational.hpp"

#include <cstddef>
#include <optional>
#include <span>
#include <vector>

namespace dgakit {

using Vector = std::vector<Rational>;

// Dense row-major matrix over the rationals. Sizes here are desk-scale
// (graded pieces and simplicial cochain groups), so no sparsity tricks.
class Matrix {
 public:
  Matrix() = default;
  Matrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}

  static Matrix identity(std::size_t n);
  static Matrix from_columns(const std::vector<Vector>& columns, std::size_t rows);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }

  Rational& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  const Rational& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

  Matrix transpose() const;
  Vector apply(std::span<const Rational> x) const;
  Vector column(std::size_t c) const;
  Matrix select_rows(std::span<const std::size_t> rows) const;
  Matrix select_columns(std::span<const std::size_t> cols) const;

  bool operator==(const Matrix&) const = default;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Rational> data_;
};

Matrix operator*(const Matrix& a, const Matrix& b);

struct RowEchelon {
  Matrix reduced;
  std::vector<std::size_t> pivots;  // pivot column of each nonzero row
};

RowEchelon rref(Matrix m);
std::size_t rank(const Matrix& m);

// Particular solution of A x = b with every free variable set to zero, or
// nothing when the system is inconsistent.
std::optional<Vector> solve(const Matrix& a, const Vector& b);

// Basis of { x : A x = 0 }, one vector per free column (that column = 1).
std::vector<Vector> nullspace(const Matrix& a);

// Greedy independent subset of the columns, in order.
std::vector<std::size_t> independent_columns(const Matrix& a);

// Inverse of a square matrix, nothing if singular.
std::optional<Matrix> inverse(const Matrix& a);

bool is_zero(std::span<const Rational> v);

// Integer solution of A x = b for integral A and b (column Hermite reduction),
// nothing if no integral solution exists.
std::optional<std::vector<Integer>> solve_integral(const Matrix& a, const Vector& b);

}  // namespace dgakit
