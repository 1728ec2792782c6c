#include "dgakit/lp.hpp"

#include "dgakit/errors.hpp"

namespace dgakit {

namespace {

// Dense tableau: rows_ constraint rows plus the reduced-cost row at index m.
struct Tableau {
  std::size_t m = 0;
  std::size_t n = 0;  // structural columns (rhs stored separately)
  std::vector<Vector> rows;
  Vector rhs;
  Vector cost;  // reduced costs
  Rational objective;  // -(current objective value)
  std::vector<std::size_t> basis;

  void pivot(std::size_t r, std::size_t c) {
    const Rational p = rows[r][c];
    for (auto& v : rows[r]) v /= p;
    rhs[r] /= p;
    for (std::size_t i = 0; i < m; ++i) {
      if (i == r || sgn(rows[i][c]) == 0) continue;
      const Rational f = rows[i][c];
      for (std::size_t j = 0; j < n; ++j)
        if (sgn(rows[r][j]) != 0) rows[i][j] -= f * rows[r][j];
      rhs[i] -= f * rhs[r];
    }
    if (sgn(cost[c]) != 0) {
      const Rational f = cost[c];
      for (std::size_t j = 0; j < n; ++j)
        if (sgn(rows[r][j]) != 0) cost[j] -= f * rows[r][j];
      objective -= f * rhs[r];
    }
    basis[r] = c;
  }

  // Runs Bland's rule over the columns flagged in `allowed`. Returns false
  // when the objective is unbounded below.
  bool optimize(const std::vector<bool>& allowed) {
    for (;;) {
      std::size_t enter = n;
      for (std::size_t j = 0; j < n; ++j)
        if (allowed[j] && sgn(cost[j]) < 0) {
          enter = j;
          break;
        }
      if (enter == n) return true;
      std::size_t leave = m;
      Rational best;
      for (std::size_t i = 0; i < m; ++i) {
        if (sgn(rows[i][enter]) <= 0) continue;
        Rational ratio = rhs[i] / rows[i][enter];
        if (leave == m || ratio < best || (ratio == best && basis[i] < basis[leave])) {
          leave = i;
          best = ratio;
        }
      }
      if (leave == m) return false;
      pivot(leave, enter);
    }
  }

  void set_costs(const Vector& c) {
    cost = c;
    objective = 0;
    for (std::size_t i = 0; i < m; ++i) {
      const Rational cb = c[basis[i]];
      if (sgn(cb) == 0) continue;
      for (std::size_t j = 0; j < n; ++j)
        if (sgn(rows[i][j]) != 0) cost[j] -= cb * rows[i][j];
      objective -= cb * rhs[i];
    }
  }
};

}  // namespace

LPResult solve_lp(const Matrix& A, const Vector& b, const Vector& c) {
  const std::size_t m = A.rows();
  const std::size_t n = A.cols();
  if (b.size() != m || c.size() != n) fail("InvalidArgument", "LP dimensions do not match");

  Tableau T;
  T.m = m;
  T.n = n + m;
  T.rows.assign(m, Vector(n + m));
  T.rhs.resize(m);
  T.basis.resize(m);
  for (std::size_t i = 0; i < m; ++i) {
    const bool flip = sgn(b[i]) < 0;
    for (std::size_t j = 0; j < n; ++j) T.rows[i][j] = flip ? Rational(-A(i, j)) : A(i, j);
    T.rhs[i] = flip ? Rational(-b[i]) : b[i];
    T.rows[i][n + i] = 1;
    T.basis[i] = n + i;
  }

  // Phase 1: minimize the sum of artificials.
  Vector phase1(n + m);
  for (std::size_t i = 0; i < m; ++i) phase1[n + i] = 1;
  T.set_costs(phase1);
  T.optimize(std::vector<bool>(n + m, true));
  if (sgn(T.objective) != 0) return {LPStatus::Infeasible, {}, 0};

  // Drive artificials out of the basis; drop redundant rows.
  for (std::size_t i = 0; i < T.m;) {
    if (T.basis[i] < n) {
      ++i;
      continue;
    }
    std::size_t col = n;
    for (std::size_t j = 0; j < n; ++j)
      if (sgn(T.rows[i][j]) != 0) {
        col = j;
        break;
      }
    if (col < n) {
      T.pivot(i, col);
      ++i;
    } else {
      T.rows.erase(T.rows.begin() + static_cast<long>(i));
      T.rhs.erase(T.rhs.begin() + static_cast<long>(i));
      T.basis.erase(T.basis.begin() + static_cast<long>(i));
      --T.m;
    }
  }

  Vector phase2(n + m);
  for (std::size_t j = 0; j < n; ++j) phase2[j] = c[j];
  T.set_costs(phase2);
  std::vector<bool> allowed(n + m, false);
  for (std::size_t j = 0; j < n; ++j) allowed[j] = true;
  if (!T.optimize(allowed)) return {LPStatus::Unbounded, {}, 0};

  LPResult result;
  result.status = LPStatus::Optimal;
  result.x.assign(n, Rational(0));
  for (std::size_t i = 0; i < T.m; ++i)
    if (T.basis[i] < n) result.x[T.basis[i]] = T.rhs[i];
  result.value = -T.objective;
  return result;
}

}  // namespace dgakit
