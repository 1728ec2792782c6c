#include "dgakit/linalg.hpp"

#include "dgakit/errors.hpp"

#include <utility>

namespace dgakit {

Matrix Matrix::identity(std::size_t n) {
  Matrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
  return m;
}

Matrix Matrix::from_columns(const std::vector<Vector>& columns, std::size_t rows) {
  Matrix m(rows, columns.size());
  for (std::size_t c = 0; c < columns.size(); ++c)
    for (std::size_t r = 0; r < rows; ++r) m(r, c) = columns[c][r];
  return m;
}

Matrix Matrix::transpose() const {
  Matrix t(cols_, rows_);
  for (std::size_t r = 0; r < rows_; ++r)
    for (std::size_t c = 0; c < cols_; ++c) t(c, r) = (*this)(r, c);
  return t;
}

Vector Matrix::apply(std::span<const Rational> x) const {
  Vector y(rows_);
  for (std::size_t r = 0; r < rows_; ++r) {
    Rational acc = 0;
    for (std::size_t c = 0; c < cols_; ++c)
      if (sgn((*this)(r, c)) != 0 && sgn(x[c]) != 0) acc += (*this)(r, c) * x[c];
    y[r] = acc;
  }
  return y;
}

Vector Matrix::column(std::size_t c) const {
  Vector v(rows_);
  for (std::size_t r = 0; r < rows_; ++r) v[r] = (*this)(r, c);
  return v;
}

Matrix Matrix::select_rows(std::span<const std::size_t> rows) const {
  Matrix m(rows.size(), cols_);
  for (std::size_t i = 0; i < rows.size(); ++i)
    for (std::size_t c = 0; c < cols_; ++c) m(i, c) = (*this)(rows[i], c);
  return m;
}

Matrix Matrix::select_columns(std::span<const std::size_t> cols) const {
  Matrix m(rows_, cols.size());
  for (std::size_t r = 0; r < rows_; ++r)
    for (std::size_t j = 0; j < cols.size(); ++j) m(r, j) = (*this)(r, cols[j]);
  return m;
}

Matrix operator*(const Matrix& a, const Matrix& b) {
  if (a.cols() != b.rows()) fail("DimensionMismatch", "matrix product");
  Matrix out(a.rows(), b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t k = 0; k < a.cols(); ++k) {
      if (sgn(a(i, k)) == 0) continue;
      for (std::size_t j = 0; j < b.cols(); ++j)
        if (sgn(b(k, j)) != 0) out(i, j) += a(i, k) * b(k, j);
    }
  return out;
}

RowEchelon rref(Matrix m) {
  RowEchelon out;
  std::size_t row = 0;
  for (std::size_t col = 0; col < m.cols() && row < m.rows(); ++col) {
    std::size_t pivot = row;
    while (pivot < m.rows() && sgn(m(pivot, col)) == 0) ++pivot;
    if (pivot == m.rows()) continue;
    if (pivot != row)
      for (std::size_t c = 0; c < m.cols(); ++c) std::swap(m(pivot, c), m(row, c));
    Rational inv = 1 / m(row, col);
    for (std::size_t c = col; c < m.cols(); ++c) m(row, c) *= inv;
    for (std::size_t r = 0; r < m.rows(); ++r) {
      if (r == row || sgn(m(r, col)) == 0) continue;
      Rational factor = m(r, col);
      for (std::size_t c = col; c < m.cols(); ++c)
        if (sgn(m(row, c)) != 0) m(r, c) -= factor * m(row, c);
    }
    out.pivots.push_back(col);
    ++row;
  }
  out.reduced = std::move(m);
  return out;
}

std::size_t rank(const Matrix& m) { return rref(m).pivots.size(); }

std::optional<Vector> solve(const Matrix& a, const Vector& b) {
  if (b.size() != a.rows()) fail("DimensionMismatch", "solve: right-hand side");
  Matrix aug(a.rows(), a.cols() + 1);
  for (std::size_t r = 0; r < a.rows(); ++r) {
    for (std::size_t c = 0; c < a.cols(); ++c) aug(r, c) = a(r, c);
    aug(r, a.cols()) = b[r];
  }
  RowEchelon e = rref(std::move(aug));
  Vector x(a.cols());
  for (std::size_t i = 0; i < e.pivots.size(); ++i) {
    if (e.pivots[i] == a.cols()) return std::nullopt;
    x[e.pivots[i]] = e.reduced(i, a.cols());
  }
  return x;
}

std::vector<Vector> nullspace(const Matrix& a) {
  RowEchelon e = rref(a);
  std::vector<bool> is_pivot(a.cols(), false);
  for (auto p : e.pivots) is_pivot[p] = true;
  std::vector<Vector> basis;
  for (std::size_t free = 0; free < a.cols(); ++free) {
    if (is_pivot[free]) continue;
    Vector v(a.cols());
    v[free] = 1;
    for (std::size_t i = 0; i < e.pivots.size(); ++i) v[e.pivots[i]] = -e.reduced(i, free);
    basis.push_back(std::move(v));
  }
  return basis;
}

std::vector<std::size_t> independent_columns(const Matrix& a) { return rref(a).pivots; }

std::optional<Matrix> inverse(const Matrix& a) {
  if (a.rows() != a.cols()) fail("DimensionMismatch", "inverse of non-square matrix");
  const std::size_t n = a.rows();
  Matrix aug(n, 2 * n);
  for (std::size_t r = 0; r < n; ++r) {
    for (std::size_t c = 0; c < n; ++c) aug(r, c) = a(r, c);
    aug(r, n + r) = 1;
  }
  RowEchelon e = rref(std::move(aug));
  if (e.pivots.size() < n || e.pivots[n - 1] != n - 1) return std::nullopt;
  Matrix inv(n, n);
  for (std::size_t r = 0; r < n; ++r)
    for (std::size_t c = 0; c < n; ++c) inv(r, c) = e.reduced(r, n + c);
  return inv;
}

bool is_zero(std::span<const Rational> v) {
  for (const auto& x : v)
    if (sgn(x) != 0) return false;
  return true;
}

std::optional<std::vector<Integer>> solve_integral(const Matrix& a, const Vector& b) {
  const std::size_t m = a.rows();
  const std::size_t n = a.cols();
  for (std::size_t r = 0; r < m; ++r) {
    if (!is_integral(b[r])) return std::nullopt;
    for (std::size_t c = 0; c < n; ++c)
      if (!is_integral(a(r, c))) fail("DomainError", "solve_integral needs an integral matrix");
  }
  // Column operations H = A U with U unimodular, bringing A to column echelon form.
  std::vector<std::vector<Integer>> h(m, std::vector<Integer>(n));
  std::vector<std::vector<Integer>> u(n, std::vector<Integer>(n));
  for (std::size_t r = 0; r < m; ++r)
    for (std::size_t c = 0; c < n; ++c) h[r][c] = a(r, c).get_num();
  for (std::size_t c = 0; c < n; ++c) u[c][c] = 1;

  auto col_axpy = [&](std::size_t dst, std::size_t src, const Integer& k) {  // col dst -= k * col src
    for (std::size_t r = 0; r < m; ++r) h[r][dst] -= k * h[r][src];
    for (std::size_t r = 0; r < n; ++r) u[r][dst] -= k * u[r][src];
  };
  auto col_swap = [&](std::size_t i, std::size_t j) {
    for (std::size_t r = 0; r < m; ++r) std::swap(h[r][i], h[r][j]);
    for (std::size_t r = 0; r < n; ++r) std::swap(u[r][i], u[r][j]);
  };

  std::vector<std::pair<std::size_t, std::size_t>> pivots;  // (row, col)
  std::size_t col = 0;
  for (std::size_t row = 0; row < m && col < n; ++row) {
    // Euclid on the entries h[row][col..n) until only column `col` is nonzero.
    while (true) {
      std::size_t best = n;
      for (std::size_t c = col; c < n; ++c)
        if (h[row][c] != 0 && (best == n || abs(h[row][c]) < abs(h[row][best]))) best = c;
      if (best == n) break;
      if (best != col) col_swap(best, col);
      bool done = true;
      for (std::size_t c = col + 1; c < n; ++c) {
        if (h[row][c] == 0) continue;
        Integer q;
        mpz_fdiv_q(q.get_mpz_t(), h[row][c].get_mpz_t(), h[row][col].get_mpz_t());
        col_axpy(c, col, q);
        if (h[row][c] != 0) done = false;
      }
      if (done) break;
    }
    if (h[row][col] != 0) {
      pivots.emplace_back(row, col);
      ++col;
    }
  }

  // Forward substitution H y = b.
  std::vector<Integer> y(n);
  std::vector<Integer> residual(m);
  for (std::size_t r = 0; r < m; ++r) residual[r] = b[r].get_num();
  for (auto [row, c] : pivots) {
    // rows between previous pivot row and this one must already be satisfied
    Integer q, rem;
    mpz_fdiv_qr(q.get_mpz_t(), rem.get_mpz_t(), residual[row].get_mpz_t(), h[row][c].get_mpz_t());
    if (rem != 0) return std::nullopt;
    y[c] = q;
    for (std::size_t r = 0; r < m; ++r) residual[r] -= q * h[r][c];
  }
  for (const auto& r : residual)
    if (r != 0) return std::nullopt;

  std::vector<Integer> x(n);
  for (std::size_t r = 0; r < n; ++r)
    for (std::size_t c = 0; c < n; ++c)
      if (y[c] != 0) x[r] += u[r][c] * y[c];
  return x;
}

}  // namespace dgakit
