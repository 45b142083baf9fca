#pragma once

#include <gmpxx.h>

#include <string>

namespace coiso {

// Arbitrary-precision rational, always canonical (lowest terms, positive denominator).
using Rational = mpq_class;

Rational make_rational(long num, long den = 1);
Rational rational_from_string(const std::string& digits_num, const std::string& digits_den = "1");
std::string to_string(const Rational& q);
Rational factorial(int n);

inline bool is_zero(const Rational& q) { return sgn(q) == 0; }

}  // namespace coiso
