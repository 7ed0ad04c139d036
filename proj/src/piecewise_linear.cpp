#include "roughlab/piecewise_linear.hpp"

#include "roughlab/error.hpp"

#include <algorithm>

namespace roughlab {

PiecewiseLinear::PiecewiseLinear(std::vector<Rational> breakpoints, std::vector<Rational> values)
    : breakpoints_(std::move(breakpoints)), values_(std::move(values)) {
    if (breakpoints_.empty()) fail(ErrorKind::argument, "piecewise-linear function needs a breakpoint");
    if (breakpoints_.size() != values_.size())
        fail(ErrorKind::argument, "breakpoint and value counts differ");
    for (std::size_t i = 1; i < breakpoints_.size(); ++i)
        if (!(breakpoints_[i - 1] < breakpoints_[i]))
            fail(ErrorKind::argument, "breakpoints not strictly increasing at " + to_string(breakpoints_[i]));
}

PiecewiseLinear PiecewiseLinear::constant(const Rational& c, const Rational& u, const Rational& v) {
    if (u == v) return PiecewiseLinear({u}, {c});
    return PiecewiseLinear({u, v}, {c, c});
}

PiecewiseLinear PiecewiseLinear::identity(const Rational& u, const Rational& v) {
    if (u == v) return PiecewiseLinear({u}, {u});
    return PiecewiseLinear({u, v}, {u, v});
}

Rational PiecewiseLinear::operator()(const Rational& x) const {
    if (x < breakpoints_.front() || x > breakpoints_.back())
        fail(ErrorKind::domain, "x = " + to_string(x) + " outside [" + to_string(breakpoints_.front()) + ", " +
                                    to_string(breakpoints_.back()) + "]");
    const auto it = std::lower_bound(breakpoints_.begin(), breakpoints_.end(), x);
    const auto i = static_cast<std::size_t>(it - breakpoints_.begin());
    if (*it == x) return values_[i];
    const Rational& x0 = breakpoints_[i - 1];
    const Rational& x1 = breakpoints_[i];
    const Rational t = (x - x0) / (x1 - x0);
    return values_[i - 1] + t * (values_[i] - values_[i - 1]);
}

Rational segment_slope(const Rational& x0, const Rational& y0, const Rational& x1, const Rational& y1) {
    return (y1 - y0) / (x1 - x0);
}

Rational PiecewiseLinear::max_slope() const {
    if (breakpoints_.size() < 2) fail(ErrorKind::argument, "max slope of a single-point function");
    Rational best = 0;
    for (std::size_t i = 1; i < breakpoints_.size(); ++i)
        best = max(best, abs(segment_slope(breakpoints_[i - 1], values_[i - 1], breakpoints_[i], values_[i])));
    return best;
}

Rational PiecewiseLinear::sup_abs() const {
    Rational best = 0;
    for (const auto& v : values_) best = max(best, abs(v));
    return best;
}

PiecewiseLinear PiecewiseLinear::restricted(const Rational& u, const Rational& v) const {
    if (v < u) fail(ErrorKind::argument, "empty restriction interval");
    if (u < breakpoints_.front() || v > breakpoints_.back())
        fail(ErrorKind::domain, "restriction [" + to_string(u) + ", " + to_string(v) + "] leaves the domain");
    std::vector<Rational> xs{u};
    std::vector<Rational> ys{(*this)(u)};
    for (std::size_t i = 0; i < breakpoints_.size(); ++i) {
        if (breakpoints_[i] > u && breakpoints_[i] < v) {
            xs.push_back(breakpoints_[i]);
            ys.push_back(values_[i]);
        }
    }
    if (v != u) {
        xs.push_back(v);
        ys.push_back((*this)(v));
    }
    return PiecewiseLinear(std::move(xs), std::move(ys));
}

PiecewiseLinear PiecewiseLinear::rescaled_onto(const Rational& u, const Rational& v) const {
    if (!(u < v)) fail(ErrorKind::argument, "rescale target must be a proper interval");
    const Rational a = breakpoints_.front();
    const Rational len = breakpoints_.back() - a;
    if (len == 0) fail(ErrorKind::argument, "cannot rescale a single-point function");
    std::vector<Rational> xs;
    xs.reserve(breakpoints_.size());
    for (const auto& x : breakpoints_) xs.push_back(u + (x - a) / len * (v - u));
    return PiecewiseLinear(std::move(xs), values_);
}

PiecewiseLinear PiecewiseLinear::scaled(const Rational& s) const {
    std::vector<Rational> ys;
    ys.reserve(values_.size());
    for (const auto& y : values_) ys.push_back(y * s);
    return PiecewiseLinear(breakpoints_, std::move(ys));
}

PiecewiseLinear PiecewiseLinear::shifted(const Rational& c) const {
    std::vector<Rational> ys;
    ys.reserve(values_.size());
    for (const auto& y : values_) ys.push_back(y + c);
    return PiecewiseLinear(breakpoints_, std::move(ys));
}

namespace {

PiecewiseLinear combine(const PiecewiseLinear& f, const PiecewiseLinear& g, int sign) {
    if (!(f.domain() == g.domain())) fail(ErrorKind::domain, "combining functions over different domains");
    std::vector<Rational> xs;
    std::set_union(f.breakpoints().begin(), f.breakpoints().end(), g.breakpoints().begin(), g.breakpoints().end(),
                   std::back_inserter(xs));
    std::vector<Rational> ys;
    ys.reserve(xs.size());
    for (const auto& x : xs) ys.push_back(sign > 0 ? Rational(f(x) + g(x)) : Rational(f(x) - g(x)));
    return PiecewiseLinear(std::move(xs), std::move(ys));
}

}  // namespace

PiecewiseLinear operator+(const PiecewiseLinear& f, const PiecewiseLinear& g) { return combine(f, g, 1); }
PiecewiseLinear operator-(const PiecewiseLinear& f, const PiecewiseLinear& g) { return combine(f, g, -1); }

PiecewiseLinear concatenate(const std::vector<PiecewiseLinear>& pieces) {
    if (pieces.empty()) fail(ErrorKind::argument, "nothing to concatenate");
    std::vector<Rational> xs = pieces.front().breakpoints();
    std::vector<Rational> ys = pieces.front().values();
    for (std::size_t p = 1; p < pieces.size(); ++p) {
        const auto& piece = pieces[p];
        if (piece.breakpoints().front() != xs.back())
            fail(ErrorKind::construction, "pieces do not abut at " + to_string(xs.back()));
        if (piece.values().front() != ys.back())
            fail(ErrorKind::construction, "discontinuity at " + to_string(xs.back()) + ": " + to_string(ys.back()) +
                                              " vs " + to_string(piece.values().front()));
        xs.insert(xs.end(), piece.breakpoints().begin() + 1, piece.breakpoints().end());
        ys.insert(ys.end(), piece.values().begin() + 1, piece.values().end());
    }
    return PiecewiseLinear(std::move(xs), std::move(ys));
}

std::vector<Rational> uniform_grid(const Rational& u, const Rational& v, unsigned long n) {
    if (n == 0) return {u};
    std::vector<Rational> out;
    out.reserve(n + 1);
    for (unsigned long k = 0; k <= n; ++k) out.push_back(u + (v - u) * Rational(k) / n);
    return out;
}

}  // namespace roughlab
