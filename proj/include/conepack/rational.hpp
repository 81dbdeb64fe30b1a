#pragma once

#include <gmpxx.h>

#include <string>
#include <string_view>

namespace conepack {

// Exact arithmetic used wherever control flow branches on signs.
using Rational = mpq_class;
using Integer = mpz_class;

inline double to_double(const Rational& q) { return q.get_d(); }

// mpq_class(num, den) keeps the fraction unreduced; always build through
// this helper so equality and sign tests see canonical values.
inline Rational make_ratio(long num, long den) {
  Rational q(num, den);
  q.canonicalize();
  return q;
}

// Exact lift: every finite double is a dyadic rational.
Rational rational_of(double value);

// Largest double <= q (mpq_get_d truncates toward zero, so for positive
// values the plain conversion already rounds down).
double double_below(const Rational& q);

// Accepts "p/q", integers, and decimal notation with an optional exponent
// ("-3", "7/2", "0.25", "1.5e2").
Rational parse_rational(std::string_view text);

// "p" when the denominator is 1, "p/q" otherwise.
std::string to_string(const Rational& q);

inline int sign_of(const Rational& q) { return sgn(q); }

}  // namespace conepack
