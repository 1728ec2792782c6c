#include "helpers.hpp"

#include <doctest.h>

using namespace dgakit;
using namespace dgakit::testing;

namespace {

// ω : 2 closed, c : 1 with dc = ω
FreeCDGA omega_and_primitive() {
  auto bare = FreeCDGA::make({{"w", 2, {}}, {"c", 1, {}}}, std::vector<Element>(2));
  return FreeCDGA::make({{"w", 2, {}}, {"c", 1, {}}}, {Element(), bare.gen("w")});
}

SquareElement random_square(const FreeCDGA& A, int degree, std::mt19937& rng) {
  SquareElement u;
  for (int k = 0; k < 6; ++k) {
    SquareElement::Key key{static_cast<unsigned>(rng() % 3), static_cast<unsigned>(rng() % 3), rng() % 2 == 0,
                           rng() % 2 == 0};
    const int shift = int(key.dt) + int(key.ds);
    if (degree - shift < 0) continue;
    u.add(random_element(A, degree - shift, rng), key);
  }
  return u;
}

}  // namespace

TEST_SUITE("cylinder_calculus") {
  TEST_CASE("differential sign convention") {
    const FreeCDGA T = canned_model("Scaled_target");
    const Element xy = T.multiply(T.gen("x"), T.gen("y"));
    CHECK(cyl_differentiate(T, CylinderElement::term(xy, 1, false)) == CylinderElement::term(-xy, 0, true));
    const FreeCDGA A = omega_and_primitive();
    CylinderElement u = CylinderElement::term(A.gen("w"), 0, false) - CylinderElement::term(A.gen("w"), 1, false);
    u += CylinderElement::term(A.gen("c"), 0, true);
    CHECK(cyl_differentiate(A, u).is_zero());
    const FreeCDGA S2 = canned_model("S2");
    CHECK(cyl_differentiate(S2, CylinderElement::constant(S2.gen("y"))) ==
          CylinderElement::constant(S2.differentiate(S2.gen("y"))));
  }

  TEST_CASE("integration formulas") {
    const FreeCDGA S3 = canned_model("S3");
    const Element a = S3.gen("a");
    for (unsigned i = 0; i < 4; ++i) CHECK(integrate_0_t(S3, CylinderElement::term(a, i, false)).is_zero());
    CHECK(integrate_0_t(S3, CylinderElement::term(a, 0, true)) == CylinderElement::term(-a, 1, false));
    CHECK(integrate_0_1(S3, CylinderElement::term(a, 1, true)) == a * q(-1, 2));
    CHECK(integrate_0_1(S3, CylinderElement::term(a, 3, false)).is_zero());
  }

  TEST_CASE("identities on the worked inputs") {
    const FreeCDGA S3 = canned_model("S3");
    const Element a = S3.gen("a");
    const CylinderElement u = CylinderElement::term(a, 0, true);
    CHECK(cyl_differentiate(S3, integrate_0_t(S3, u)) + integrate_0_t(S3, cyl_differentiate(S3, u)) == u);
    const CylinderElement v = CylinderElement::term(a, 1, false);
    CHECK(integrate_0_1(S3, cyl_differentiate(S3, v)) == a);
  }

  TEST_CASE("property: integration identities on 1000 random elements") {
    std::mt19937 rng(2024);
    const FreeCDGA A = playground();
    int checked = 0;
    for (int trial = 0; trial < 1200; ++trial) {
      const int degree = 1 + static_cast<int>(rng() % 5);
      const CylinderElement u = random_cylinder(A, degree, rng);
      // d ∫₀ᵗ u + ∫₀ᵗ du = u - u|_{t=0}
      const CylinderElement lhs_t = cyl_differentiate(A, integrate_0_t(A, u)) + integrate_0_t(A, cyl_differentiate(A, u));
      CHECK(lhs_t == u - CylinderElement::constant(evaluate_at(u, 0)));
      // d ∫₀¹ u + ∫₀¹ du = u|_{t=1} - u|_{t=0}
      const Element lhs_1 = A.differentiate(integrate_0_1(A, u)) + integrate_0_1(A, cyl_differentiate(A, u));
      CHECK(lhs_1 == evaluate_at(u, 1) - evaluate_at(u, 0));
      ++checked;
    }
    CHECK(checked >= 1000);
  }

  TEST_CASE("property: d^2 = 0, Leibniz, and endpoint evaluation") {
    std::mt19937 rng(7);
    const FreeCDGA A = playground();
    for (int trial = 0; trial < 200; ++trial) {
      const int p = 1 + static_cast<int>(rng() % 3);
      const int r = 1 + static_cast<int>(rng() % 3);
      const CylinderElement u = random_cylinder(A, p, rng, 3);
      const CylinderElement v = random_cylinder(A, r, rng, 3);
      CHECK(cyl_differentiate(A, cyl_differentiate(A, u)).is_zero());
      const Rational s = p % 2 ? -1 : 1;
      CHECK(cyl_differentiate(A, cyl_multiply(A, u, v)) ==
            cyl_multiply(A, cyl_differentiate(A, u), v) + cyl_multiply(A, u, cyl_differentiate(A, v)) * s);
      for (int e : {0, 1}) {
        CHECK(evaluate_at(cyl_multiply(A, u, v), e) == A.multiply(evaluate_at(u, e), evaluate_at(v, e)));
        CHECK(evaluate_at(cyl_differentiate(A, u), e) == A.differentiate(evaluate_at(u, e)));
      }
    }
  }

  TEST_CASE("integral over [0,1] of a dt-free element vanishes") {
    std::mt19937 rng(8);
    const FreeCDGA A = playground();
    for (int trial = 0; trial < 50; ++trial) {
      CylinderElement u;
      for (unsigned i = 0; i < 4; ++i) u.add(random_element(A, 2, rng), i, false);
      CHECK(integrate_0_1(A, u).is_zero());
    }
  }

  TEST_CASE("reversal negates the integral") {
    std::mt19937 rng(9);
    const FreeCDGA A = playground();
    for (int trial = 0; trial < 50; ++trial) {
      const CylinderElement u = random_cylinder(A, 3, rng);
      CHECK(integrate_0_1(A, reverse_interval(u)) == -integrate_0_1(A, u));
      CHECK(evaluate_at(reverse_interval(u), 0) == evaluate_at(u, 1));
    }
  }

  TEST_CASE("square: integration in s") {
    const FreeCDGA S3 = canned_model("S3");
    const Element a = S3.gen("a");
    const SquareElement u = SquareElement::term(a, {0, 0, false, true});
    CHECK(square_integrate_0_s(S3, u) == SquareElement::term(-a, {0, 1, false, false}));
    CHECK(square_integrate_0_s(S3, SquareElement::term(a, {2, 1, false, false})).is_zero());
  }

  TEST_CASE("square: diagonal restriction") {
    const FreeCDGA S3 = canned_model("S3");
    const Element a = S3.gen("a");
    CHECK(diagonal_restrict(SquareElement::term(a, {0, 1, false, false})) == CylinderElement::term(a, 1, false));
    const SquareElement u = SquareElement::term(a, {0, 1, true, false}) + SquareElement::term(a, {1, 0, false, true});
    CHECK(diagonal_restrict(u) == CylinderElement::term(a * Rational(2), 1, true));
  }

  TEST_CASE("property: square identities") {
    std::mt19937 rng(10);
    const FreeCDGA A = playground();
    for (int trial = 0; trial < 300; ++trial) {
      const int degree = 1 + static_cast<int>(rng() % 4);
      const SquareElement u = random_square(A, degree, rng);
      // d ∫₀ˢ u + ∫₀ˢ du = u - u|_{s=0}
      CHECK(square_differentiate(A, square_integrate_0_s(A, u)) +
                square_integrate_0_s(A, square_differentiate(A, u)) ==
            u - restrict_s(u, 0));
      CHECK(square_differentiate(A, square_differentiate(A, u)).is_zero());
      CHECK(diagonal_restrict(square_differentiate(A, u)) == cyl_differentiate(A, diagonal_restrict(u)));
      CHECK(evaluate_at(diagonal_restrict(u), 1) ==
            evaluate_at(diagonal_restrict(restrict_s(restrict_t(u, 1), 1)), 0));
      const SquareElement v = random_square(A, 2, rng);
      CHECK(diagonal_restrict(square_multiply(A, u, v)) ==
            cyl_multiply(A, diagonal_restrict(u), diagonal_restrict(v)));
    }
  }
}
