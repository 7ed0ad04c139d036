#include "roughlab/function_handle.hpp"

#include "roughlab/error.hpp"

namespace roughlab {

FunctionHandle::FunctionHandle(std::string name, Interval domain, Eval eval, std::optional<Modulus> modulus)
    : name_(std::move(name)), domain_(std::move(domain)), eval_(std::move(eval)), modulus_(std::move(modulus)) {
    if (domain_.hi < domain_.lo) fail(ErrorKind::argument, "empty domain for " + name_);
}

FunctionHandle FunctionHandle::from_pl(const PiecewiseLinear& f, std::string name) {
    const Rational slope = f.size() >= 2 ? f.max_slope() : Rational(0);
    Modulus lipschitz{[slope](const Rational& d) { return Rational(slope * d); }, to_string(slope) + "*d"};
    return FunctionHandle(std::move(name), f.domain(),
                          [f](const Rational& x, const Rational&) { return Enclosure::point(f(x)); },
                          std::move(lipschitz));
}

FunctionHandle FunctionHandle::constant(const Rational& c, Interval domain) {
    Modulus zero{[](const Rational&) { return Rational(0); }, "0"};
    return FunctionHandle("constant " + to_string(c), std::move(domain),
                          [c](const Rational&, const Rational&) { return Enclosure::point(c); }, std::move(zero));
}

Enclosure FunctionHandle::operator()(const Rational& x, const Rational& eps) const {
    if (!domain_.contains(x))
        fail(ErrorKind::domain, name_ + ": x = " + to_string(x) + " outside [" + to_string(domain_.lo) + ", " +
                                    to_string(domain_.hi) + "]");
    if (eps <= 0) fail(ErrorKind::argument, name_ + ": tolerance must be positive");
    return eval_(x, eps);
}

FunctionHandle FunctionHandle::plus(const Rational& c, std::string name) const {
    Eval inner = eval_;
    return FunctionHandle(std::move(name), domain_,
                          [inner, c](const Rational& x, const Rational& eps) { return inner(x, eps) + c; }, modulus_);
}

FunctionHandle2D::FunctionHandle2D(std::string name, Interval domain_x, Interval domain_y, Eval eval)
    : name_(std::move(name)), domain_x_(std::move(domain_x)), domain_y_(std::move(domain_y)), eval_(std::move(eval)) {}

FunctionHandle2D FunctionHandle2D::constant(const Rational& c) {
    return FunctionHandle2D("constant " + to_string(c), {0, 1}, {0, 1},
                            [c](const Rational&, const Rational&, const Rational&) { return Enclosure::point(c); });
}

Enclosure FunctionHandle2D::operator()(const Rational& x, const Rational& y, const Rational& eps) const {
    if (!in_domain(x, y))
        fail(ErrorKind::domain, name_ + ": point (" + to_string(x) + ", " + to_string(y) + ") outside the domain");
    if (eps <= 0) fail(ErrorKind::argument, name_ + ": tolerance must be positive");
    return eval_(x, y, eps);
}

Enclosure sup_distance_grid(const FunctionHandle& f, const FunctionHandle& g, const std::vector<Rational>& grid,
                            const Rational& eps) {
    if (grid.empty()) fail(ErrorKind::argument, "sup distance over an empty grid");
    std::optional<Enclosure> best;
    for (const auto& x : grid) {
        const Enclosure d = abs(f(x, eps) - g(x, eps));
        best = best ? max(*best, d) : d;
    }
    return *best;
}

}  // namespace roughlab
