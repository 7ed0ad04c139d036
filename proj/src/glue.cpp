#include "roughlab/glue.hpp"

#include "roughlab/error.hpp"
#include "roughlab/pathology.hpp"

#include <algorithm>
#include <map>

namespace roughlab {

std::vector<GlueBreakpoints> default_glue_breakpoints(unsigned count) {
    std::vector<GlueBreakpoints> out;
    for (unsigned n = 1; n <= count + 1; ++n) {
        const Rational lo(1, n + 2), hi(1, n + 1);
        const Rational q = (hi - lo) / 4;
        out.push_back({lo + q, lo + 2 * q, lo + 3 * q});
    }
    return out;
}

void validate(const GlueSpec& spec) {
    const unsigned N = spec.count;
    if (N == 0) fail(ErrorKind::argument, "glue spec: count must be positive");
    if (spec.breakpoints.size() != N + 1)
        fail(ErrorKind::argument, "glue spec: need breakpoints for n = 1.." + std::to_string(N + 1));
    if (spec.members.size() != N) fail(ErrorKind::argument, "glue spec: need members f_1..f_" + std::to_string(N));
    for (unsigned n = 1; n <= N + 1; ++n) {
        const auto& [a, b, c] = spec.breakpoints[n - 1];
        if (!(Rational(1, n + 2) < a && a < b && b < c && c < Rational(1, n + 1)))
            fail(ErrorKind::argument, "glue spec: breakpoints of n = " + std::to_string(n) +
                                          " must satisfy 1/(n+2) < a < b < c < 1/(n+1)");
    }
    const PiecewiseLinear& z = spec.roughener;
    if (!(z.domain() == Interval{0, 1})) fail(ErrorKind::argument, "glue spec: roughener must live on [0, 1]");
    if (z.sup_abs() > 1) fail(ErrorKind::argument, "glue spec: roughener norm exceeds 1");
    for (unsigned n = 1; n <= N + 1; ++n) {
        const auto& bp = spec.breakpoints[n - 1];
        if (z(bp.b) != 0) fail(ErrorKind::argument, "glue spec: roughener not pinned at b_" + std::to_string(n));
        if (z(bp.c) != 0) fail(ErrorKind::argument, "glue spec: roughener not pinned at c_" + std::to_string(n));
    }
    for (const auto& f : spec.members)
        if (!(f.domain() == Interval{0, 1})) fail(ErrorKind::argument, "glue spec: member " + f.name() + " not on [0, 1]");
}

PiecewiseLinear make_pinned_roughener(const std::vector<GlueBreakpoints>& bp, unsigned terms) {
    if (bp.empty()) fail(ErrorKind::argument, "roughener needs breakpoints");
    const PiecewiseLinear t = PiecewiseLinear::sample(uniform_grid(0, 1, 1ul << terms),
                                                      [&](const Rational& x) { return takagi_partial(x, terms); });
    const PiecewiseLinear shape = t.sup_abs() == 0 ? t : t.scaled(1 / t.sup_abs());

    std::vector<PiecewiseLinear> pieces;
    const std::size_t last = bp.size() - 1;
    pieces.push_back(PiecewiseLinear::constant(0, 0, bp[last].c));
    for (std::size_t k = last; k-- > 0;) {
        pieces.push_back(shape.rescaled_onto(bp[k + 1].c, bp[k].b));
        pieces.push_back(shape.rescaled_onto(bp[k].b, bp[k].c));
    }
    pieces.push_back(shape.rescaled_onto(bp[0].c, 1));
    return concatenate(pieces);
}

bool GlueReport::continuous() const {
    return std::all_of(breakpoints.begin(), breakpoints.end(), [](const auto& b) { return b.equal; });
}

bool GlueReport::flat_on_I1() const {
    return std::all_of(flat.begin(), flat.end(), [](const auto& f) { return f.difference == 0; });
}

GlueResult glue_translation(const GlueSpec& spec, const std::vector<Rational>& grid, const Rational& eps) {
    validate(spec);
    const unsigned N = spec.count;
    const auto& bp = spec.breakpoints;
    const PiecewiseLinear& z = spec.roughener;

    // f_n for n = 1..N, f_(N+1) = limit; cached so shared values agree exactly
    std::map<std::pair<unsigned, Rational>, Rational> cache;
    auto f = [&](unsigned n, const Rational& x) -> Rational {
        auto key = std::make_pair(n, x);
        auto it = cache.find(key);
        if (it != cache.end()) return it->second;
        const FunctionHandle& h = n <= N ? spec.members[n - 1] : spec.limit;
        return cache.emplace(key, h(x, eps).midpoint()).first->second;
    };
    auto ramp = [&](unsigned n, const Rational& x) -> Rational {
        const Rational& c = bp[n].c;  // c_(n+1)
        const Rational& a = bp[n - 1].a;
        return (f(n, a) - f(n + 1, a)) * (x - c) / (a - c);
    };
    auto on_I1 = [&](unsigned n, const Rational& x) { return f(n, x); };
    auto on_I2 = [&](unsigned n, const Rational& x) { return Rational(f(n, x) - z(x) / n); };
    auto on_J = [&](unsigned n, const Rational& x) { return Rational(f(n + 1, x) + ramp(n, x)); };

    auto h = [&](const Rational& x) -> Rational {
        if (x >= bp[0].c) return f(1, bp[0].c);
        for (unsigned n = 1; n <= N; ++n) {
            const auto& [a, b, c] = bp[n - 1];
            if (x >= b) return on_I2(n, x);
            if (x >= a) return on_I1(n, x);
            if (x >= bp[n].c) return on_J(n, x);
        }
        return f(N + 1, x);
    };

    std::vector<Rational> xs = grid;
    xs.push_back(0);
    xs.push_back(1);
    for (unsigned n = 1; n <= N; ++n) {
        xs.push_back(bp[n - 1].a);
        xs.push_back(bp[n - 1].b);
        xs.push_back(bp[n - 1].c);
    }
    xs.push_back(bp[N].c);
    for (const auto& x : z.breakpoints()) xs.push_back(x);
    std::sort(xs.begin(), xs.end());
    xs.erase(std::unique(xs.begin(), xs.end()), xs.end());
    xs.erase(std::remove_if(xs.begin(), xs.end(), [](const Rational& x) { return x < 0 || x > 1; }), xs.end());

    GlueResult out{PiecewiseLinear::sample(xs, h), {}};

    auto record = [&](std::string label, const Rational& x, Rational left, Rational right) {
        const bool eq = left == right;
        out.report.breakpoints.push_back({std::move(label), x, std::move(left), std::move(right), eq});
    };
    const Rational c1 = bp[0].c;
    record("c_1", c1, on_I2(1, c1), f(1, c1));
    for (unsigned n = 1; n <= N; ++n) {
        const auto& [a, b, c] = bp[n - 1];
        const std::string k = std::to_string(n);
        record("b_" + k, b, on_I1(n, b), on_I2(n, b));
        record("a_" + k, a, on_J(n, a), on_I1(n, a));
        const Rational& cn = bp[n].c;
        record("c_" + std::to_string(n + 1), cn, n < N ? on_I2(n + 1, cn) : f(N + 1, cn), on_J(n, cn));
    }

    for (unsigned n = 1; n <= N; ++n) {
        const auto& [a, b, c] = bp[n - 1];
        std::vector<Rational> pts{a, b};
        for (const auto& x : grid)
            if (a < x && x < b) pts.push_back(x);
        std::sort(pts.begin(), pts.end());
        for (const auto& x : pts) out.report.flat.push_back({n, x, Rational(f(n, x) - out.h(x))});
    }
    return out;
}

}  // namespace roughlab
