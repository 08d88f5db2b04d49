#pragma once

#include <gmpxx.h>

#include <string>
#include <string_view>

namespace lctkit {

using Integer = mpz_class;
using Rational = mpq_class;

// Accepts "p", "-p", "p/q"; throws ParseError on malformed input or zero denominator.
Rational parse_rational(std::string_view text);

// Canonical form: "p" for integers, "p/q" otherwise.
std::string to_string(const Rational& q);
// Always "p/q", including "-4/1".
std::string to_fraction_string(const Rational& q);

inline bool is_integer(const Rational& q) { return q.get_den() == 1; }

Integer lcm(const Integer& a, const Integer& b);
Integer gcd(const Integer& a, const Integer& b);
Integer binomial(long n, long k);

// Smallest positive integer N with q*N integral.
inline Integer denominator(const Rational& q) { return q.get_den(); }

Rational floor_rational(const Rational& q);

}  // namespace lctkit
