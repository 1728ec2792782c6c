#pragma once

#include "dgakit/cylinder.hpp"
#include "dgakit/graded.hpp"
#include "dgakit/minimal.hpp"

#include <random>
#include <string>
#include <vector>

namespace dgakit::testing {

// Random homogeneous element of the given degree with small integer or
// half-integer coefficients; may be zero when the graded piece is empty.
inline Element random_element(const FreeCDGA& A, int degree, std::mt19937& rng, double density = 0.6) {
  Element out;
  std::uniform_int_distribution<int> coeff(-4, 4);
  std::uniform_real_distribution<double> coin(0, 1);
  for (const auto& m : A.graded_basis(degree)) {
    if (coin(rng) > density) continue;
    const int c = coeff(rng);
    if (c != 0) out.add_term(m, make_rational(c, 1 + static_cast<long>(rng() % 2)));
  }
  return out;
}

inline Rational q(long num, long den = 1) { return make_rational(num, den); }

inline CylinderElement random_cylinder(const FreeCDGA& A, int degree, std::mt19937& rng, unsigned max_power = 4) {
  CylinderElement u;
  for (unsigned i = 0; i <= max_power; ++i) {
    if (rng() % 2) u.add(random_element(A, degree, rng), i, false);
    if (degree >= 1 && rng() % 2) u.add(random_element(A, degree - 1, rng), i, true);
  }
  return u;
}

// a, b : 1, x : 2 closed; y : 3, dy = x^2; u : 1, du = ab; v : 2, dv = ax.
inline FreeCDGA playground() {
  auto bare = FreeCDGA::make({{"a", 1, {}}, {"b", 1, {}}, {"x", 2, {}}, {"y", 3, {}}, {"u", 1, {}}, {"v", 2, {}}},
                             std::vector<Element>(6));
  std::vector<Element> d(6);
  d[3] = bare.multiply(bare.gen("x"), bare.gen("x"));
  d[4] = bare.multiply(bare.gen("a"), bare.gen("b"));
  d[5] = bare.multiply(bare.gen("a"), bare.gen("x"));
  return FreeCDGA::make({{"a", 1, {}}, {"b", 1, {}}, {"x", 2, {}}, {"y", 3, {}}, {"u", 1, {}}, {"v", 2, {}}}, d);
}

}  // namespace dgakit::testing
