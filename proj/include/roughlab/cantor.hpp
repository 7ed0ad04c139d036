#pragma once

#include "roughlab/config.hpp"
#include "roughlab/piecewise_linear.hpp"

#include <cstdint>
#include <vector>

namespace roughlab {

// Point of the ternary Cantor set: digits d_1 d_2 ... over {0, 2}, given as
// a finite prefix followed by a repeating block (empty block = all zeros).
class CantorPoint {
public:
    // Throws Error(argument) for digits outside {0, 2} and Error(capacity)
    // when prefix plus block exceed max_digits.
    CantorPoint(std::vector<std::uint8_t> prefix, std::vector<std::uint8_t> repeat = {},
                std::size_t max_digits = limits().max_digits);

    // The {0, 2} expansion of q (endpoints use their trailing-2 form where
    // needed). Throws Error(domain) if q is outside [0, 1] and
    // Error(argument) if q is not in the Cantor set.
    static CantorPoint from_rational(const Rational& q);

    // 1-based digit access.
    std::uint8_t digit(std::size_t k) const;
    const Rational& value() const { return value_; }
    const std::vector<std::uint8_t>& prefix() const { return prefix_; }
    const std::vector<std::uint8_t>& repeat() const { return repeat_; }
    bool has_infinitely_many_zeros() const;

    // First `count` positions k with digit(k) == 0, increasing.
    // Throws Error(exhaustion) when fewer exist.
    std::vector<std::size_t> zero_positions(std::size_t count) const;

    // x -> 1 - x, digits 0 <-> 2.
    CantorPoint mirrored() const;

private:
    struct Unchecked {};
    CantorPoint(Unchecked, std::vector<std::uint8_t> prefix, std::vector<std::uint8_t> repeat);

    std::vector<std::uint8_t> prefix_;
    std::vector<std::uint8_t> repeat_;
    Rational value_;
};

// Exact membership: true iff q has some ternary expansion using only 0 and 2.
bool cantor_contains(const Rational& q);

struct LevelSets {
    unsigned n = 0;
    std::vector<Rational> D;  // sorted
    std::vector<Rational> E;  // sorted, D_n minus D_(n-1)
};

// D_1 = E_1 = {0, 1}; D_n = {i / 3^(n-1)} intersected with C. Throws
// Error(capacity) above max_levels and Error(argument) for n = 0.
LevelSets level_points(unsigned n, std::size_t max_levels = limits().max_levels);

// Smallest n with d in D_n; Error(argument) if d is not a finite-expansion
// Cantor point.
unsigned level_of(const Rational& d);

// Half-width of U_d for d in E_n: (3^-(n-1) + 3^-(n+1)) / 2.
Rational neighborhood_radius(unsigned n);

// U_d = [0,1] intersected with [d - rho, d + rho]; requires d in E_n.
Interval neighborhood(const Rational& d, unsigned n);
// U_d at d's own level.
Interval neighborhood(const Rational& d);

// Right approach d_1 = 1, d_2k = 1 - sum_{j<k} 2/3^i_j - 1/3^i_k,
// d_(2k+1) = 1 - sum_{j<k} 2/3^i_j - 2/3^i_k where i_1 < i_2 < ... are the
// positions of zero digits of c. Requires value(c) < 1.
std::vector<Rational> approach_sequence(const CantorPoint& c, std::size_t count);

// Left approach through the mirror x -> 1 - x.
std::vector<Rational> left_approach_sequence(const CantorPoint& c, std::size_t count);

struct ApproachCheck {
    std::size_t m = 0;
    Rational d_m;
    Rational d_next;
    Rational sup_neighborhood;  // sup U_(d_(m+1))
    Rational threshold;         // c + (d_m - c) / 4
    bool holds = false;         // sup_neighborhood > threshold
};

// Exact check of sup U_(d_(m+1)) > c + (d_m - c)/4 for m = 1..count-1.
std::vector<ApproachCheck> approach_inequality_check(const CantorPoint& c, std::size_t count);

}  // namespace roughlab
