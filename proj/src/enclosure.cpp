#include "roughlab/enclosure.hpp"

#include "roughlab/error.hpp"

#include <algorithm>
#include <array>

namespace roughlab {

Enclosure::Enclosure(Rational lo, Rational hi) : lo_(std::move(lo)), hi_(std::move(hi)) {
    if (hi_ < lo_)
        fail(ErrorKind::argument, "enclosure with lo > hi: [" + to_string(lo_) + ", " + to_string(hi_) + "]");
}

Enclosure Enclosure::around(const Rational& center, const Rational& radius) {
    return Enclosure(center - radius, center + radius);
}

Enclosure Enclosure::widened(const Rational& r) const { return Enclosure(lo_ - r, hi_ + r); }

Enclosure Enclosure::rounded_out(unsigned long bits) const {
    return Enclosure(dyadic_floor(lo_, bits), dyadic_ceil(hi_, bits));
}

Enclosure& Enclosure::operator+=(const Enclosure& e) {
    lo_ += e.lo_;
    hi_ += e.hi_;
    return *this;
}

Enclosure& Enclosure::operator-=(const Enclosure& e) {
    lo_ -= e.hi_;
    hi_ -= e.lo_;
    return *this;
}

Enclosure operator+(const Enclosure& a, const Enclosure& b) {
    Enclosure out = a;
    out += b;
    return out;
}

Enclosure operator-(const Enclosure& a, const Enclosure& b) {
    Enclosure out = a;
    out -= b;
    return out;
}

Enclosure operator*(const Enclosure& a, const Enclosure& b) {
    const std::array<Rational, 4> p{a.lo() * b.lo(), a.lo() * b.hi(), a.hi() * b.lo(), a.hi() * b.hi()};
    const auto [mn, mx] = std::minmax_element(p.begin(), p.end());
    return Enclosure(*mn, *mx);
}

Enclosure operator*(const Enclosure& a, const Rational& s) {
    if (s >= 0) return Enclosure(a.lo() * s, a.hi() * s);
    return Enclosure(a.hi() * s, a.lo() * s);
}

Enclosure operator*(const Rational& s, const Enclosure& a) { return a * s; }

Enclosure operator+(const Enclosure& a, const Rational& s) { return Enclosure(a.lo() + s, a.hi() + s); }
Enclosure operator-(const Enclosure& a, const Rational& s) { return Enclosure(a.lo() - s, a.hi() - s); }

Enclosure operator/(const Enclosure& a, const Enclosure& b) {
    if (b.contains_zero()) fail(ErrorKind::argument, "division by an enclosure containing zero");
    return a * Enclosure(1 / b.hi(), 1 / b.lo());
}

Enclosure operator/(const Enclosure& a, const Rational& s) {
    if (s == 0) fail(ErrorKind::argument, "division by zero");
    return a * Rational(1 / s);
}

Enclosure abs(const Enclosure& e) {
    if (e.lo() >= 0) return e;
    if (e.hi() <= 0) return -e;
    return Enclosure(0, max(Rational(-e.lo()), e.hi()));
}

Enclosure square(const Enclosure& e) {
    const Enclosure a = abs(e);
    return Enclosure(a.lo() * a.lo(), a.hi() * a.hi());
}

Enclosure hull(const Enclosure& a, const Enclosure& b) {
    return Enclosure(min(a.lo(), b.lo()), max(a.hi(), b.hi()));
}

Enclosure max(const Enclosure& a, const Enclosure& b) {
    return Enclosure(max(a.lo(), b.lo()), max(a.hi(), b.hi()));
}

Enclosure intersect(const Enclosure& a, const Enclosure& b) {
    if (!a.intersects(b)) fail(ErrorKind::argument, "disjoint enclosures " + to_string(a) + " and " + to_string(b));
    return Enclosure(max(a.lo(), b.lo()), min(a.hi(), b.hi()));
}

Tri certainly_greater(const Enclosure& a, const Enclosure& b) {
    if (a.lo() > b.hi()) return Tri::yes;
    if (a.hi() <= b.lo()) return Tri::no;
    return Tri::unknown;
}

Tri certainly_greater(const Enclosure& a, const Rational& b) {
    return certainly_greater(a, Enclosure::point(b));
}

Tri certainly_less(const Enclosure& a, const Rational& b) {
    if (a.hi() < b) return Tri::yes;
    if (a.lo() >= b) return Tri::no;
    return Tri::unknown;
}

Tri certainly_le(const Enclosure& a, const Rational& b) {
    if (a.hi() <= b) return Tri::yes;
    if (a.lo() > b) return Tri::no;
    return Tri::unknown;
}

std::string to_string(const Enclosure& e) {
    return "[" + to_string(e.lo()) + ", " + to_string(e.hi()) + "]";
}

}  // namespace roughlab
