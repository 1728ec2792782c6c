#include "dgakit/errors.hpp"
#include "dgakit/recurrence.hpp"

#include <doctest.h>

#include <cmath>

using namespace dgakit;

TEST_SUITE("recurrence") {
  TEST_CASE("crossing point") {
    RecurrenceOptions o;
    o.kappa = 5;
    const RecurrenceReport r = weird_recurrence(o);
    CHECK(std::abs(r.crossing / 7.2e10 - 1) < 0.01);
    CHECK(r.crossing == doctest::Approx(std::exp(25.0)));
    CHECK(format_scientific(r.crossing) == "7.20e10");
    CHECK(rho(r.crossing, 5) == doctest::Approx(r.crossing));

    o.kappa = 1e-3;
    CHECK(weird_recurrence(o).crossing == doctest::Approx(1.0));
  }

  TEST_CASE("default exponent constant keeps the ratio non-increasing") {
    const RecurrenceReport r = weird_recurrence({});
    CHECK(r.kappa == doctest::Approx(std::sqrt(2 * std::log(8.0))));
    CHECK(r.ratio_nonincreasing);
    REQUIRE(!r.rows.empty());
    CHECK(r.rows.front().L == doctest::Approx(1e4));
    CHECK(r.rows.back().L == doctest::Approx(1e12));
    for (const auto& row : r.rows) CHECK(row.ratio <= r.max_ratio);
  }

  TEST_CASE("formatting") {
    CHECK(format_scientific(7.2004e10) == "7.20e10");
    CHECK(format_scientific(1.0) == "1.00e0");
    CHECK(format_scientific(0.00123) == "1.23e-3");
  }

  TEST_CASE("argument checks") {
    RecurrenceOptions o;
    o.C = 0.5;
    CHECK_THROWS_AS(weird_recurrence(o), DomainError);
    RecurrenceOptions p;
    p.Lmin = 10;
    p.Lmax = 1;
    CHECK_THROWS_AS(weird_recurrence(p), DomainError);
  }
}
