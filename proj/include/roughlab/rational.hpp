#pragma once

#include <gmpxx.h>

#include <string>
#include <string_view>

namespace roughlab {

using Integer = mpz_class;
// Canonical (reduced, positive denominator) after every gmpxx arithmetic op.
using Rational = mpq_class;

Rational make_rational(const Integer& num, const Integer& den);
inline Rational make_rational(long num, long den) {
    return make_rational(Integer(num), Integer(den));
}

// Accepts "p", "p/q", and decimal forms such as "-0.125" or "1e-9".
// Throws Error(usage) naming the offending token.
Rational parse_rational(std::string_view text);

// "p/q", or "p" when the denominator is 1; parse_rational inverts it.
std::string to_string(const Rational& q);
std::string to_string(const Integer& z);

Integer floor(const Rational& q);
Integer ceil(const Rational& q);
Rational frac(const Rational& q);
Rational abs(const Rational& q);
Rational pow(const Rational& base, unsigned long exponent);
Rational min(const Rational& a, const Rational& b);
Rational max(const Rational& a, const Rational& b);

// Distance from q to the nearest integer, in [0, 1/2].
Rational dist_to_Z(const Rational& q);

bool is_dyadic(const Rational& q);

// Nearest multiples of 2^-bits below / above q.
Rational dyadic_floor(const Rational& q, unsigned long bits);
Rational dyadic_ceil(const Rational& q, unsigned long bits);

// Smallest k >= 0 with 2^-k <= tol (tol > 0).
unsigned long bits_for(const Rational& tol);

double to_double(const Rational& q);

}  // namespace roughlab
