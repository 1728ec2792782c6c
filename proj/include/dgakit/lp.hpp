#pragma once

#include "dgakit/linalg.hpp"

namespace dgakit {

enum class LPStatus { Optimal, Infeasible, Unbounded };

struct LPResult {
  LPStatus status = LPStatus::Infeasible;
  Vector x;  // optimal point when status == Optimal
  Rational value;
};

// Exact two-phase simplex with Bland's rule on the standard form
//   minimize c·x  subject to  A x = b,  x >= 0.
LPResult solve_lp(const Matrix& A, const Vector& b, const Vector& c);

}  // namespace dgakit
