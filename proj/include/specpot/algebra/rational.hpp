#pragma once

#include <gmpxx.h>

#include <optional>
#include <string>
#include <string_view>

namespace specpot {

/// Exact rational number. mpq_class keeps gcd(num, den) = 1 and den > 0 for
/// every arithmetic result; values built from two integers go through
/// make_rational so the invariant also holds at construction.
using Rational = mpq_class;
using Integer = mpz_class;

Rational make_rational(long num, long den = 1);
Rational make_rational(const Integer& num, const Integer& den);

/// Accepts "p", "-p", "p/q" with decimal integers.
std::optional<Rational> parse_rational(std::string_view text);

/// "p" when the denominator is 1, "p/q" otherwise.
std::string to_string(const Rational& q);

bool is_integer(const Rational& q);
/// Nearest double, ties to even.
double to_double(const Rational& q);

/// Exact square root when q is the square of a rational.
std::optional<Rational> rational_sqrt(const Rational& q);

Rational pow(const Rational& base, long exponent);

Integer factorial(unsigned long n);

/// x (x+1) ... (x+n-1); 1 for n = 0.
Rational rising_factorial(const Rational& x, unsigned long n);

} // namespace specpot
