#pragma once

#include "roughlab/enclosure.hpp"
#include "roughlab/piecewise_linear.hpp"

#include <functional>
#include <optional>
#include <string>
#include <vector>

namespace roughlab {

// Declared modulus of continuity: |f(u) - f(v)| <= bound(|u - v|).
struct Modulus {
    std::function<Rational(const Rational&)> bound;
    std::string expression;
};

// Evaluable real function on a closed rational interval. eval(x, eps) must
// return an enclosure of f(x) of width <= 2*eps; zero-width results are exact.
class FunctionHandle {
public:
    using Eval = std::function<Enclosure(const Rational& x, const Rational& eps)>;

    FunctionHandle(std::string name, Interval domain, Eval eval, std::optional<Modulus> modulus = std::nullopt);

    static FunctionHandle from_pl(const PiecewiseLinear& f, std::string name = "pl");
    static FunctionHandle constant(const Rational& c, Interval domain = {0, 1});

    // Throws Error(domain) outside the domain, Error(argument) for eps <= 0.
    Enclosure operator()(const Rational& x, const Rational& eps) const;

    const std::string& name() const { return name_; }
    const Interval& domain() const { return domain_; }
    const std::optional<Modulus>& modulus() const { return modulus_; }

    // Pointwise sum with a constant.
    FunctionHandle plus(const Rational& c, std::string name) const;

private:
    std::string name_;
    Interval domain_;
    Eval eval_;
    std::optional<Modulus> modulus_;
};

// Function on the closed box domain_x x domain_y, same width contract.
class FunctionHandle2D {
public:
    using Eval = std::function<Enclosure(const Rational& x, const Rational& y, const Rational& eps)>;

    FunctionHandle2D(std::string name, Interval domain_x, Interval domain_y, Eval eval);

    static FunctionHandle2D constant(const Rational& c);

    Enclosure operator()(const Rational& x, const Rational& y, const Rational& eps) const;
    bool in_domain(const Rational& x, const Rational& y) const {
        return domain_x_.contains(x) && domain_y_.contains(y);
    }

    const std::string& name() const { return name_; }
    const Interval& domain_x() const { return domain_x_; }
    const Interval& domain_y() const { return domain_y_; }

private:
    std::string name_;
    Interval domain_x_;
    Interval domain_y_;
    Eval eval_;
};

// Enclosure of max over grid of |f(x) - g(x)| from per-point enclosures at
// tolerance eps. Its lower end is a certified lower bound for ||f - g||.
// Throws Error(argument) on an empty grid.
Enclosure sup_distance_grid(const FunctionHandle& f, const FunctionHandle& g, const std::vector<Rational>& grid,
                            const Rational& eps);

}  // namespace roughlab
