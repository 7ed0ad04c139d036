#pragma once

#include "roughlab/config.hpp"
#include "roughlab/function_handle.hpp"

#include <cstdint>
#include <optional>
#include <vector>

namespace roughlab {

// ---- Takagi function T(x) = sum_{n>=0} 2^-n dist(2^n x, Z) ---------------

// Exact value for rational x in [0, 1]. The doubling orbit of x is
// preperiodic; the periodic part is summed as a geometric series.
// Throws Error(domain) outside [0, 1] and Error(capacity) when the orbit
// period exceeds period_cap.
Rational takagi_exact(const Rational& x, std::size_t period_cap = limits().takagi_period_cap);

// sum_{n<terms} 2^-n dist(2^n x, Z); piecewise linear in x with
// breakpoints at multiples of 2^-terms.
Rational takagi_partial(const Rational& x, unsigned long terms);

// Partial sum plus the tail bound 2^-(N+1) <= eps; width <= eps.
Enclosure takagi_enclosure(const Rational& x, const Rational& eps);

// T(frac(x)) for x >= 0.
Enclosure wrapped_takagi(const Rational& x, const Rational& eps);

// Declared modulus |T(u) - T(v)| <= 2 d (1 + ceil(log2(1/d))), d = |u - v|.
Rational takagi_modulus(const Rational& d);

// T(x) + T(y), exact.
Rational sum_takagi(const Rational& x, const Rational& y);

// Exact when the doubling orbit is short, otherwise the enclosure path.
FunctionHandle takagi_handle();
FunctionHandle2D sum_takagi_handle();
FunctionHandle2D radial_takagi_handle();

// T~(sqrt(x1^2 + x2^2)) for (x1, x2) in [0,1]^2. The radius is enclosed by
// a certified square root and its uncertainty pushed through the declared
// modulus; Pythagorean radii are evaluated exactly.
Enclosure radial_takagi(const Rational& x1, const Rational& x2, const Rational& eps);

// ---- Signed Weierstrass-type series ---------------------------------------

struct WeierstrassParams {
    Rational a;
    unsigned long b = 0;
    // Encloses 2/3 - 4a/(1-a) - pi/(ab-1).
    Enclosure margin;
};

// a = 1/14, b = 147.
WeierstrassParams lemma_default_params();

enum class MarginStatus { accepted, b_even, ab_not_above_one, margin_not_positive };
const char* to_string(MarginStatus status) noexcept;

struct MarginResult {
    MarginStatus status = MarginStatus::accepted;
    std::optional<Enclosure> margin;
    std::optional<WeierstrassParams> params;  // set iff accepted
};

// Requires 0 < a < 1 and b >= 1 (Error(precondition)). An enclosure
// straddling zero raises Error(undecided) rather than accepting.
MarginResult weierstrass_margin(const Rational& a, unsigned long b, const Rational& eps);

// Sign bits alpha(0), alpha(1), ... : an explicit prefix followed by an
// extension rule.
class SignSequence {
public:
    enum class Tail { zeros, ones, periodic };

    SignSequence(std::vector<std::uint8_t> prefix, Tail tail = Tail::zeros);

    static SignSequence all_zero() { return SignSequence({0}); }
    static SignSequence alternating() { return SignSequence({0, 1}, Tail::periodic); }

    int bit(std::size_t j) const;
    // (-1)^alpha(j)
    int sign(std::size_t j) const { return bit(j) == 0 ? 1 : -1; }
    SignSequence flipped() const;

    const std::vector<std::uint8_t>& prefix() const { return prefix_; }
    Tail tail() const { return tail_; }

private:
    std::vector<std::uint8_t> prefix_;
    Tail tail_;
};

// sum_j (-1)^alpha(j) a^j cos(b^j pi x) for x in [0, 1]; truncated where
// a^(N+1)/(1-a) <= eps/2 with cosine error at most eps/2. Width <= 2 eps.
Enclosure weierstrass_eval(const WeierstrassParams& p, const SignSequence& alpha, const Rational& x,
                           const Rational& eps);

FunctionHandle weierstrass_handle(const WeierstrassParams& p, const SignSequence& alpha);

}  // namespace roughlab
