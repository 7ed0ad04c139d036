#pragma once

#include "roughlab/enclosure.hpp"

namespace roughlab {

// Enclosures below have width <= tol (tol > 0) and rational endpoints.

// Machin's formula with alternating-series tail bounds.
Enclosure pi_enclosure(const Rational& tol);

// cos(pi * t). The argument is reduced modulo 2 exactly, so large t costs
// no accuracy; integer and half-integer t give exact results.
Enclosure cos_pi(const Rational& t, const Rational& tol);
// Inclusion-monotone up to tol: encloses cos(pi * s) for every s in t.
Enclosure cos_pi(const Enclosure& t, const Rational& tol);

// sqrt(q) for q >= 0; exact point enclosure when q is a rational square.
Enclosure sqrt_enclosure(const Rational& q, const Rational& tol);
Enclosure sqrt_enclosure(const Enclosure& q, const Rational& tol);

// Exact square root when q is the square of a rational, otherwise false.
bool exact_sqrt(const Rational& q, Rational& root);

}  // namespace roughlab
