#pragma once

#include <gmpxx.h>

#include <string>
#include <string_view>

namespace dgakit {

using Rational = mpq_class;
using Integer = mpz_class;

// "p" for integers, "p/q" otherwise.
std::string to_string(const Rational& q);

// Accepts "p", "-p", "p/q"; throws DomainError("ParseError") otherwise.
Rational parse_rational(std::string_view text);

inline Rational make_rational(long num, long den = 1) {
  Rational q(num, den);
  q.canonicalize();
  return q;
}

inline bool is_integral(const Rational& q) { return q.get_den() == 1; }

// Nearest integer, ties rounded towards +infinity (floor(q + 1/2)).
Integer round_nearest(const Rational& q);

}  // namespace dgakit
