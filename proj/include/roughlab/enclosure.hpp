#pragma once

#include "roughlab/rational.hpp"

#include <string>

namespace roughlab {

// Three-valued outcome of comparing enclosed quantities.
enum class Tri { yes, no, unknown };

// Closed interval [lo, hi] with rational endpoints, lo <= hi.
class Enclosure {
public:
    Enclosure() = default;
    Enclosure(Rational lo, Rational hi);
    static Enclosure point(const Rational& q) { return Enclosure(q, q); }
    // [center - radius, center + radius]
    static Enclosure around(const Rational& center, const Rational& radius);

    const Rational& lo() const { return lo_; }
    const Rational& hi() const { return hi_; }
    Rational width() const { return hi_ - lo_; }
    Rational midpoint() const { return (lo_ + hi_) / 2; }
    bool is_point() const { return lo_ == hi_; }

    bool contains(const Rational& q) const { return lo_ <= q && q <= hi_; }
    bool contains(const Enclosure& e) const { return lo_ <= e.lo_ && e.hi_ <= hi_; }
    bool intersects(const Enclosure& e) const { return lo_ <= e.hi_ && e.lo_ <= hi_; }
    bool contains_zero() const { return lo_ <= 0 && 0 <= hi_; }

    Enclosure widened(const Rational& r) const;
    // Endpoints moved outward onto the grid 2^-bits.
    Enclosure rounded_out(unsigned long bits) const;

    Enclosure operator-() const { return Enclosure(-hi_, -lo_); }
    Enclosure& operator+=(const Enclosure& e);
    Enclosure& operator-=(const Enclosure& e);

    friend bool operator==(const Enclosure& a, const Enclosure& b) {
        return a.lo_ == b.lo_ && a.hi_ == b.hi_;
    }

private:
    Rational lo_{0};
    Rational hi_{0};
};

Enclosure operator+(const Enclosure& a, const Enclosure& b);
Enclosure operator-(const Enclosure& a, const Enclosure& b);
Enclosure operator*(const Enclosure& a, const Enclosure& b);
Enclosure operator*(const Enclosure& a, const Rational& s);
Enclosure operator*(const Rational& s, const Enclosure& a);
Enclosure operator+(const Enclosure& a, const Rational& s);
Enclosure operator-(const Enclosure& a, const Rational& s);
// Throws Error(argument) when b contains zero.
Enclosure operator/(const Enclosure& a, const Enclosure& b);
Enclosure operator/(const Enclosure& a, const Rational& s);

Enclosure abs(const Enclosure& e);
Enclosure square(const Enclosure& e);
Enclosure hull(const Enclosure& a, const Enclosure& b);
Enclosure max(const Enclosure& a, const Enclosure& b);
// Throws Error(argument) when the enclosures are disjoint.
Enclosure intersect(const Enclosure& a, const Enclosure& b);

// a > b certified iff a.lo > b.hi; refuted iff a.hi <= b.lo.
Tri certainly_greater(const Enclosure& a, const Enclosure& b);
Tri certainly_greater(const Enclosure& a, const Rational& b);
// a < b certified iff a.hi < b.lo; refuted iff a.lo >= b.hi.
Tri certainly_less(const Enclosure& a, const Rational& b);
// a <= b certified iff a.hi <= b; refuted iff a.lo > b.
Tri certainly_le(const Enclosure& a, const Rational& b);

std::string to_string(const Enclosure& e);

}  // namespace roughlab
