#pragma once

#include "roughlab/cantor.hpp"
#include "roughlab/function_handle.hpp"
#include "roughlab/verdict.hpp"

#include <functional>
#include <optional>
#include <vector>

namespace roughlab {

// Functions f_d indexed by the level points D_N.
struct AdmissibleFamily {
    unsigned depth = 0;
    std::vector<Rational> points;         // D_N, sorted
    std::vector<FunctionHandle> members;  // members[i] is f_(points[i])
    // Set for fixture families f_d = base + psi_theta(d).
    std::optional<Rational> scale;
    std::optional<FunctionHandle> base;

    // Throws Error(argument) if d is not in D_N.
    const FunctionHandle& member(const Rational& d) const;
};

// theta * sum over k with digit_k(d) = 2 of 9^-k, read off the {0, 2}
// expansion of d (so psi(1/3) uses 0.0222...).
Rational psi(const Rational& theta, const Rational& d);

// f_d = base + psi_theta(d). Throws Error(precondition) for theta < 0.
AdmissibleFamily make_admissible_family(const FunctionHandle& base, unsigned depth, const Rational& theta);

// Family from an explicit member for each d in D_N. Members must live on [0, 1].
AdmissibleFamily make_family(unsigned depth, const std::function<FunctionHandle(const Rational&)>& member);

struct ConditionRecord {
    int condition = 0;  // 1..4
    Rational d;
    Rational d2;
    Enclosure norm;  // grid sup of |f_d - f_d2|
    Rational bound;
    bool strict = false;
    Verdict verdict = Verdict::undecided;
};

struct FamilyReport {
    unsigned depth = 0;
    std::vector<ConditionRecord> records;
    std::size_t failed = 0;
    // Largest dyadic theta (40 bits) certifying every condition; fixtures only.
    std::optional<Rational> theta_star;

    bool passed() const { return failed == 0; }
};

// inf over x in [lo, hi] of (d - x)^2 + (d2 - x)^2.
Rational overlap_infimum(const Rational& d, const Rational& d2, const Interval& overlap);
// Distance from a point to a closed interval.
Rational distance(const Rational& x, const Interval& u);
// Intersection of two closed intervals, if non-empty.
std::optional<Interval> overlap(const Interval& u, const Interval& v);

// The four closeness conditions over pairs of D_N with norms taken on the
// grid. Condition 1 is checked for every pair, 2 for overlapping
// neighbourhoods, 3 for overlapping pairs on one level and 4 for an
// overlapping pair across levels.
// Throws Error(precondition) if some overlap holds fewer than two grid points
// and Error(undecided) naming the pair when a comparison is undecided.
FamilyReport check_family_conditions(const AdmissibleFamily& fam, const std::vector<Rational>& grid,
                                     const Rational& eps);

// k / 3^level for k = 0..3^level.
std::vector<Rational> triadic_grid(unsigned level);

}  // namespace roughlab
