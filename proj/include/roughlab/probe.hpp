#pragma once

#include "roughlab/pathology.hpp"
#include "roughlab/verdict.hpp"

#include <optional>
#include <utility>
#include <vector>

namespace roughlab {

struct WitnessReport {
    Rational x;
    Rational probe;
    Enclosure quotient;        // |f(probe) - f(x)| / |probe - x|
    Enclosure required_bound;  // certified iff quotient.lo > required_bound.hi
    Verdict verdict = Verdict::undecided;
    // lemma witnesses only
    std::optional<Integer> w;
    std::size_t m = 0;
    unsigned long s_m = 0;

    friend bool operator==(const WitnessReport&, const WitnessReport&) = default;
};

// w = ceil(x b^s - 1/2), the integer with x b^s - w in (-1/2, 1/2].
Integer lemma_w(const Rational& x, unsigned long b, unsigned long s);

// Probe y_m = (w_m - 1)/b^(s_m) against x for the series
// sum_j r_j a^(s_j) cos(b^(s_j) pi t) over the supplied s, r (m is 1-based).
// Terms past the last s are enclosed by 2 a^(s_last+1) / ((1-a)|y_m - x|).
// The bound is (ab)^(s_m) times the parameter margin.
// Throws Error(precondition) for x = 0, Error(domain) for x outside [0, 1],
// Error(argument) for malformed s, r or m and Error(range) when y_m < 0.
WitnessReport lemma_witness(const WeierstrassParams& p, const Rational& x, const std::vector<unsigned long>& s,
                            const std::vector<int>& r, std::size_t m, const Rational& eps);

// First y in the grid with |f(x) - f(y)| certified above M |x - y|. None
// found says nothing about membership.
std::optional<WitnessReport> lipschitz_witness(const FunctionHandle& f, const Rational& x, const Rational& M,
                                               const std::vector<Rational>& grid, const Rational& eps);

struct LadderSample {
    Rational h;
    bool skipped = false;  // p + h v left the domain
    std::optional<Enclosure> quotient;

    friend bool operator==(const LadderSample&, const LadderSample&) = default;
};

struct LadderReport {
    std::string function;
    Rational px, py;
    Rational vx, vy;     // as given
    Enclosure ux, uy;    // v / |v|
    std::vector<LadderSample> samples;
    // trend over non-skipped samples, in ladder order
    Rational max_abs_lo;
    bool abs_lo_nondecreasing = true;
    bool sign_stable = true;

    friend bool operator==(const LadderReport&, const LadderReport&) = default;
};

// (F(p + h v) - F(p)) / (h |v|) for each h of a strictly decreasing positive
// ladder. Exploratory only.
LadderReport directional_scan_2d(const FunctionHandle2D& F, const Rational& px, const Rational& py,
                                 const Rational& vx, const Rational& vy, const std::vector<Rational>& ladder,
                                 const Rational& eps);

// c = alpha sqrt(a^2+1) / sqrt(beta^2 (a^2+1) - b^2) and
// d = beta sqrt(a^2+1) / sqrt(alpha^2 (a^2+1) - b^2) for the line y = a x + b.
// Throws Error(precondition) unless 0 < alpha < beta and alpha^2 (a^2+1) > b^2.
std::pair<Enclosure, Enclosure> radial_ratio_bounds(const Rational& a, const Rational& b, const Rational& alpha,
                                                    const Rational& beta,
                                                    const Rational& tol = make_rational(1, Integer(1) << 64));

struct BanachCandidate {
    Rational x, y, vx, vy;
};

struct BanachScanSettings {
    unsigned n = 1;
    int corner_i = 0, corner_j = 0;
    bool vertical = false;  // F-type: v = (0, 1)
    unsigned xy_resolution = 8;
    unsigned v_resolution = 4;
    unsigned h_samples = 24;
};

struct BanachReport {
    BanachScanSettings settings;
    std::size_t points = 0;
    std::size_t directions = 0;
    std::vector<Rational> h;
    std::optional<BanachCandidate> candidate;
    static constexpr bool approximate = true;
};

// Searches R_n^(i,j) on a grid and unit directions with v1 >= 1/(n+1) for a
// point where every sampled h in (0, 1/n) gives |f(p + h v) - f(p)| < n h,
// certified. Samples outside [0,1]^2 are skipped; a candidate needs one
// sample inside. Directions come from ((1-t^2)/(1+t^2), 2t/(1+t^2)).
BanachReport banach_membership_scan(const FunctionHandle2D& f, const BanachScanSettings& settings, const Rational& eps);

}  // namespace roughlab
