#pragma once

#include "roughlab/rational.hpp"

#include <vector>

namespace roughlab {

// Closed rational interval [lo, hi].
struct Interval {
    Rational lo;
    Rational hi;

    bool contains(const Rational& x) const { return lo <= x && x <= hi; }
    Rational length() const { return hi - lo; }
    friend bool operator==(const Interval& a, const Interval& b) { return a.lo == b.lo && a.hi == b.hi; }
};

// Continuous piecewise-linear function over strictly increasing rational
// breakpoints. Values at breakpoints are stored exactly; between them the
// function is the linear interpolant.
class PiecewiseLinear {
public:
    PiecewiseLinear(std::vector<Rational> breakpoints, std::vector<Rational> values);

    static PiecewiseLinear constant(const Rational& c, const Rational& u = 0, const Rational& v = 1);
    static PiecewiseLinear identity(const Rational& u = 0, const Rational& v = 1);
    // Interpolant of f sampled at the strictly increasing grid.
    template <typename F>
    static PiecewiseLinear sample(const std::vector<Rational>& grid, F&& f) {
        std::vector<Rational> values;
        values.reserve(grid.size());
        for (const auto& x : grid) values.push_back(f(x));
        return PiecewiseLinear(grid, std::move(values));
    }

    const std::vector<Rational>& breakpoints() const { return breakpoints_; }
    const std::vector<Rational>& values() const { return values_; }
    Interval domain() const { return {breakpoints_.front(), breakpoints_.back()}; }
    std::size_t size() const { return breakpoints_.size(); }

    // Throws Error(domain) outside the domain.
    Rational operator()(const Rational& x) const;

    // Largest |slope| over segments; throws Error(argument) for a single point.
    Rational max_slope() const;
    Rational sup_abs() const;

    PiecewiseLinear restricted(const Rational& u, const Rational& v) const;
    // The same shape carried linearly from this domain onto [u, v].
    PiecewiseLinear rescaled_onto(const Rational& u, const Rational& v) const;
    PiecewiseLinear scaled(const Rational& s) const;
    PiecewiseLinear shifted(const Rational& c) const;

    friend PiecewiseLinear operator+(const PiecewiseLinear& f, const PiecewiseLinear& g);
    friend PiecewiseLinear operator-(const PiecewiseLinear& f, const PiecewiseLinear& g);
    friend bool operator==(const PiecewiseLinear& f, const PiecewiseLinear& g) {
        return f.breakpoints_ == g.breakpoints_ && f.values_ == g.values_;
    }

private:
    std::vector<Rational> breakpoints_;
    std::vector<Rational> values_;
};

// Pieces with adjacent domains sharing endpoints, joined into one function.
// Throws Error(construction) if adjacent pieces disagree at a shared endpoint.
PiecewiseLinear concatenate(const std::vector<PiecewiseLinear>& pieces);

// Max slope of a linear function through (x0, y0), (x1, y1).
Rational segment_slope(const Rational& x0, const Rational& y0, const Rational& x1, const Rational& y1);

// k/n for k = 0..n over [u, v].
std::vector<Rational> uniform_grid(const Rational& u, const Rational& v, unsigned long n);

}  // namespace roughlab
