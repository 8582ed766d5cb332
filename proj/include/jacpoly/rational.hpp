#pragma once

#include <gmpxx.h>

#include <string>
#include <string_view>

namespace jacpoly {

using Integer = mpz_class;
using Rational = mpq_class;

Rational make_rational(long num, long den = 1);

// Accepts "p", "-p" and "p/q".
Rational parse_rational(std::string_view text);

// "p" for integers, "p/q" otherwise.
std::string to_string(const Rational& q);
std::string to_string(const Integer& z);

bool is_integer(const Rational& q);
Integer floor_of(const Rational& q);
Integer ceil_of(const Rational& q);

// Throws std::domain_error if q is not an integer that fits in a long.
long to_long(const Rational& q);

// Negative exponents require base != 0.
Rational pow(const Rational& base, long exponent);

Integer gcd(const Integer& a, const Integer& b);
Integer lcm(const Integer& a, const Integer& b);
long gcd(long a, long b);
long lcm(long a, long b);

int sign(const Rational& q);

}  // namespace jacpoly
