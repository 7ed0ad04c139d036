#include "roughlab/transcendental.hpp"

#include "roughlab/error.hpp"

namespace roughlab {

namespace {

// Partial sum of arctan(1/k) and the magnitude of the first omitted term.
void arctan_inverse(unsigned long k, const Rational& tol, Rational& sum, Rational& err) {
    sum = 0;
    const Rational k2 = Rational(k) * k;
    Rational power = Rational(1) / k;  // 1 / k^(2n+1)
    for (unsigned long n = 0;; ++n) {
        const Rational term = power / (2 * n + 1);
        if (n % 2 == 0) sum += term; else sum -= term;
        power /= k2;
        const Rational next = power / (2 * n + 3);
        if (next <= tol) {
            err = next;
            return;
        }
    }
}

// cos(theta) for 0 <= theta <= 2 by Taylor series; alternating tail bound
// applies once theta^2 < (2k+1)(2k+2), true for k >= 1 on this range.
Enclosure cos_taylor(const Rational& theta, const Rational& tol) {
    const Rational theta2 = theta * theta;
    Rational sum = 1;
    Rational term = 1;
    for (unsigned long k = 1;; ++k) {
        term *= theta2;
        term /= (2 * k - 1) * (2 * k);
        if (k % 2 == 1) sum -= term; else sum += term;
        const Rational next = term * theta2 / ((2 * k + 1) * (2 * k + 2));
        if (next <= tol) return Enclosure::around(sum, next);
    }
}

Enclosure clamp_unit(const Enclosure& e) {
    return Enclosure(max(e.lo(), Rational(-1)), min(e.hi(), Rational(1)));
}

}  // namespace

Enclosure pi_enclosure(const Rational& tol) {
    if (tol <= 0) fail(ErrorKind::argument, "tolerance must be positive");
    const unsigned long bits = bits_for(tol) + 3;
    const Rational inner = Rational(tol) / 128;
    Rational s5, e5, s239, e239;
    arctan_inverse(5, inner, s5, e5);
    arctan_inverse(239, inner, s239, e239);
    const Rational mid = 16 * s5 - 4 * s239;
    const Rational rad = 16 * e5 + 4 * e239;
    return Enclosure::around(mid, rad).rounded_out(bits);
}

Enclosure cos_pi(const Rational& t, const Rational& tol) {
    if (tol <= 0) fail(ErrorKind::argument, "tolerance must be positive");
    // r = t mod 2 in [0, 2), folded to [0, 1/2] with a sign.
    Rational r = t - 2 * Rational(floor(Rational(t / 2)));
    if (r > 1) r = 2 - r;
    int sign = 1;
    if (r > Rational(1, 2)) {
        r = 1 - r;
        sign = -1;
    }
    if (r == 0) return Enclosure::point(Rational(sign));
    if (r == Rational(1, 2)) return Enclosure::point(Rational(0));
    if (r == Rational(1, 3)) return Enclosure::point(Rational(sign, 2));

    const unsigned long bits = bits_for(tol) + 5;
    const Enclosure pi = pi_enclosure(Rational(tol) / 16);
    const Rational theta_lo = dyadic_floor(Rational(pi.lo() * r), bits);
    const Rational theta_hi = dyadic_ceil(Rational(pi.hi() * r), bits);
    const Rational inner = Rational(tol) / 16;
    // cos is decreasing on [0, pi].
    const Enclosure at_hi = cos_taylor(theta_hi, inner);
    const Enclosure at_lo = cos_taylor(theta_lo, inner);
    Enclosure out = clamp_unit(Enclosure(at_hi.lo(), at_lo.hi()).rounded_out(bits));
    return sign > 0 ? out : -out;
}

Enclosure cos_pi(const Enclosure& t, const Rational& tol) {
    if (t.width() >= 2) return Enclosure(-1, 1);
    Enclosure out = hull(cos_pi(t.lo(), tol), cos_pi(t.hi(), tol));
    // Interior extrema sit at integers: even -> +1, odd -> -1.
    for (Integer k = ceil(t.lo()); Rational(k) <= t.hi(); ++k) {
        const bool even = mpz_even_p(k.get_mpz_t()) != 0;
        out = hull(out, Enclosure::point(Rational(even ? 1 : -1)));
    }
    return out;
}

bool exact_sqrt(const Rational& q, Rational& root) {
    if (q < 0) return false;
    if (!mpz_perfect_square_p(q.get_num_mpz_t()) || !mpz_perfect_square_p(q.get_den_mpz_t()))
        return false;
    Integer n, d;
    mpz_sqrt(n.get_mpz_t(), q.get_num_mpz_t());
    mpz_sqrt(d.get_mpz_t(), q.get_den_mpz_t());
    root = make_rational(n, d);
    return true;
}

Enclosure sqrt_enclosure(const Rational& q, const Rational& tol) {
    if (q < 0) fail(ErrorKind::domain, "square root of negative rational " + to_string(q));
    if (tol <= 0) fail(ErrorKind::argument, "tolerance must be positive");
    Rational root;
    if (exact_sqrt(q, root)) return Enclosure::point(root);
    // sqrt(n/d) = sqrt(n*d)/d, bracketed by consecutive integers after
    // scaling by 4^k.
    const Integer& d = q.get_den();
    unsigned long k = 0;
    while (Rational(1, 1) / (Rational(d) * pow(Rational(2), k)) > tol) ++k;
    Integer scaled = q.get_num() * d;
    mpz_mul_2exp(scaled.get_mpz_t(), scaled.get_mpz_t(), 2 * k);
    Integer s;
    mpz_sqrt(s.get_mpz_t(), scaled.get_mpz_t());
    Integer denom = d;
    mpz_mul_2exp(denom.get_mpz_t(), denom.get_mpz_t(), k);
    return Enclosure(make_rational(s, denom), make_rational(Integer(s + 1), denom));
}

Enclosure sqrt_enclosure(const Enclosure& q, const Rational& tol) {
    const Rational lo = max(q.lo(), Rational(0));
    if (q.hi() < 0) fail(ErrorKind::domain, "square root of negative enclosure " + to_string(q));
    return Enclosure(sqrt_enclosure(lo, tol).lo(), sqrt_enclosure(q.hi(), tol).hi());
}

}  // namespace roughlab
