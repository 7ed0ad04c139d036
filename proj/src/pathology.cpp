#include "roughlab/pathology.hpp"

#include "roughlab/error.hpp"
#include "roughlab/transcendental.hpp"

namespace roughlab {

namespace {

void require_unit(const Rational& x, const char* what) {
    if (x < 0 || x > 1) fail(ErrorKind::domain, std::string(what) + ": x = " + to_string(x) + " outside [0, 1]");
}

Rational doubled_mod1(const Rational& u) { return frac(Rational(2 * u)); }

}  // namespace

Rational takagi_exact(const Rational& x, std::size_t period_cap) {
    require_unit(x, "takagi");
    // den = 2^e * q with q odd: after e doublings the orbit is purely periodic.
    const unsigned long e = mpz_scan1(x.get_den_mpz_t(), 0);
    Rational sum = 0;
    Rational weight = 1;
    Rational u = frac(x);
    for (unsigned long n = 0; n < e; ++n) {
        sum += weight * dist_to_Z(u);
        weight /= 2;
        u = doubled_mod1(u);
    }
    if (u == 0) return sum;

    const Rational start = u;
    Rational cycle = 0;
    Rational w = 1;
    std::size_t period = 0;
    do {
        if (period == period_cap)
            fail(ErrorKind::capacity, "takagi: doubling orbit of " + to_string(x) + " has period above " +
                                          std::to_string(period_cap));
        cycle += w * dist_to_Z(u);
        w /= 2;
        u = doubled_mod1(u);
        ++period;
    } while (u != start);
    // cycle repeats with ratio w = 2^-period
    return sum + weight * cycle / (1 - w);
}

Rational takagi_partial(const Rational& x, unsigned long terms) {
    Rational sum = 0;
    Rational weight = 1;
    Rational u = frac(x);
    for (unsigned long n = 0; n < terms; ++n) {
        if (u == 0) break;
        sum += weight * dist_to_Z(u);
        weight /= 2;
        u = doubled_mod1(u);
    }
    return sum;
}

Enclosure takagi_enclosure(const Rational& x, const Rational& eps) {
    require_unit(x, "takagi");
    if (eps <= 0) fail(ErrorKind::argument, "takagi: tolerance must be positive");
    // tail after N+1 terms is at most 2^-(N+1)
    const unsigned long tail_bits = bits_for(eps);
    Rational sum = 0;
    Rational weight = 1;
    Rational u = frac(x);
    for (unsigned long n = 0; n < tail_bits; ++n) {
        if (u == 0) return Enclosure::point(sum);
        sum += weight * dist_to_Z(u);
        weight /= 2;
        u = doubled_mod1(u);
    }
    if (u == 0) return Enclosure::point(sum);
    return Enclosure(sum, sum + weight);
}

Enclosure wrapped_takagi(const Rational& x, const Rational& eps) {
    if (x < 0) fail(ErrorKind::domain, "wrapped takagi: x = " + to_string(x) + " is negative");
    return takagi_enclosure(frac(x), eps);
}

Rational takagi_modulus(const Rational& d) {
    const Rational dist = abs(d);
    if (dist == 0) return 0;
    const unsigned long k = bits_for(dist);
    return 2 * dist * (1 + k);
}

Rational sum_takagi(const Rational& x, const Rational& y) { return takagi_exact(x) + takagi_exact(y); }

namespace {

Enclosure takagi_best(const Rational& x, const Rational& eps) {
    try {
        return Enclosure::point(takagi_exact(x));
    } catch (const Error& e) {
        if (e.kind() != ErrorKind::capacity) throw;
    }
    return takagi_enclosure(x, eps);
}

Modulus takagi_modulus_decl() {
    return Modulus{[](const Rational& d) { return takagi_modulus(d); }, "2*d*(1+ceil(log2(1/d)))"};
}

}  // namespace

FunctionHandle takagi_handle() {
    return FunctionHandle("takagi", {0, 1}, takagi_best, takagi_modulus_decl());
}

FunctionHandle2D sum_takagi_handle() {
    return FunctionHandle2D("sum-takagi", {0, 1}, {0, 1},
                            [](const Rational& x, const Rational& y, const Rational& eps) {
                                return takagi_best(x, eps) + takagi_best(y, eps);
                            });
}

Enclosure radial_takagi(const Rational& x1, const Rational& x2, const Rational& eps) {
    require_unit(x1, "radial takagi");
    require_unit(x2, "radial takagi");
    if (eps <= 0) fail(ErrorKind::argument, "radial takagi: tolerance must be positive");
    const Rational s = x1 * x1 + x2 * x2;
    Rational r;
    if (exact_sqrt(s, r)) {
        const Rational f = frac(r);
        return takagi_best(f, eps);
    }
    // radius uncertainty delta with modulus(delta) <= eps/2
    Rational delta(1, 2);
    while (takagi_modulus(delta) > eps / 2) delta /= 2;
    const Enclosure radius = sqrt_enclosure(s, delta);
    const Enclosure base = takagi_enclosure(frac(radius.lo()), Rational(eps / 2));
    const Enclosure widened = base.widened(takagi_modulus(radius.width()));
    return Enclosure(max(widened.lo(), Rational(0)), min(widened.hi(), Rational(2, 3)));
}

FunctionHandle2D radial_takagi_handle() {
    return FunctionHandle2D("radial-takagi", {0, 1}, {0, 1}, radial_takagi);
}

// ---- Weierstrass ----------------------------------------------------------

const char* to_string(MarginStatus status) noexcept {
    switch (status) {
    case MarginStatus::accepted: return "accepted";
    case MarginStatus::b_even: return "b-even";
    case MarginStatus::ab_not_above_one: return "ab-not-above-one";
    case MarginStatus::margin_not_positive: return "margin-not-positive";
    }
    return "unknown";
}

MarginResult weierstrass_margin(const Rational& a, unsigned long b, const Rational& eps) {
    if (!(a > 0 && a < 1)) fail(ErrorKind::precondition, "weierstrass margin: a = " + to_string(a) + " not in (0, 1)");
    if (b < 1) fail(ErrorKind::precondition, "weierstrass margin: b must be >= 1");
    if (eps <= 0) fail(ErrorKind::argument, "weierstrass margin: tolerance must be positive");

    MarginResult out;
    if (b % 2 == 0) {
        out.status = MarginStatus::b_even;
        return out;
    }
    const Rational ab = a * b;
    if (ab <= 1) {
        out.status = MarginStatus::ab_not_above_one;
        return out;
    }
    const Rational fixed = Rational(2, 3) - 4 * a / (1 - a);
    const Enclosure pi = pi_enclosure(Rational(eps * (ab - 1)));
    const Enclosure margin = Enclosure::point(fixed) - pi / Rational(ab - 1);
    out.margin = margin;
    if (margin.lo() > 0) {
        out.status = MarginStatus::accepted;
        out.params = WeierstrassParams{a, b, margin};
        return out;
    }
    if (margin.hi() <= 0) {
        out.status = MarginStatus::margin_not_positive;
        return out;
    }
    fail(ErrorKind::undecided, "weierstrass margin sign undecided at eps = " + to_string(eps) + "; tighten eps");
}

WeierstrassParams lemma_default_params() {
    return *weierstrass_margin(Rational(1, 14), 147, Rational(1, 1000000000000)).params;
}

SignSequence::SignSequence(std::vector<std::uint8_t> prefix, Tail tail) : prefix_(std::move(prefix)), tail_(tail) {
    if (prefix_.empty()) fail(ErrorKind::argument, "sign sequence needs a non-empty prefix");
    for (auto b : prefix_)
        if (b > 1) fail(ErrorKind::argument, "sign bits must be 0 or 1");
}

int SignSequence::bit(std::size_t j) const {
    if (j < prefix_.size()) return prefix_[j];
    switch (tail_) {
    case Tail::zeros: return 0;
    case Tail::ones: return 1;
    case Tail::periodic: return prefix_[j % prefix_.size()];
    }
    return 0;
}

SignSequence SignSequence::flipped() const {
    std::vector<std::uint8_t> bits = prefix_;
    for (auto& b : bits) b ^= 1u;
    Tail t = tail_;
    if (t == Tail::zeros) t = Tail::ones;
    else if (t == Tail::ones) t = Tail::zeros;
    return SignSequence(std::move(bits), t);
}

Enclosure weierstrass_eval(const WeierstrassParams& p, const SignSequence& alpha, const Rational& x,
                           const Rational& eps) {
    require_unit(x, "weierstrass");
    if (eps <= 0) fail(ErrorKind::argument, "weierstrass: tolerance must be positive");
    const Rational one_minus_a = 1 - p.a;
    // smallest N with a^(N+1)/(1-a) <= eps/2
    unsigned long n_terms = 1;
    Rational tail = p.a / one_minus_a;
    while (tail > eps / 2) {
        tail *= p.a;
        ++n_terms;
    }
    const Rational cos_tol = eps / n_terms;
    Enclosure sum = Enclosure::point(Rational(0));
    Rational a_pow = 1;
    Integer b_pow = 1;
    for (unsigned long j = 0; j < n_terms; ++j) {
        const Enclosure c = cos_pi(Rational(Rational(b_pow) * x), cos_tol);
        const Rational coeff = alpha.sign(j) > 0 ? a_pow : Rational(-a_pow);
        sum += c * coeff;
        a_pow *= p.a;
        b_pow *= p.b;
    }
    return sum.widened(tail);
}

FunctionHandle weierstrass_handle(const WeierstrassParams& p, const SignSequence& alpha) {
    return FunctionHandle("weierstrass", {0, 1}, [p, alpha](const Rational& x, const Rational& eps) {
        return weierstrass_eval(p, alpha, x, eps);
    });
}

}  // namespace roughlab
