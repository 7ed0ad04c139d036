#include <doctest.h>

#include "roughlab/cantor.hpp"
#include "roughlab/error.hpp"
#include "roughlab/glue.hpp"
#include "roughlab/pathology.hpp"
#include "roughlab/strip.hpp"
#include "roughlab/surface.hpp"
#include "support.hpp"

#include <random>

using namespace roughlab;

namespace {

ErrorKind kind_of(auto&& fn) {
    try {
        fn();
    } catch (const Error& e) {
        return e.kind();
    }
    FAIL("expected roughlab::Error");
    return ErrorKind::usage;
}

GlueSpec constant_spec(unsigned N, unsigned terms, const std::function<Rational(unsigned)>& value) {
    const auto bp = default_glue_breakpoints(N);
    std::vector<FunctionHandle> members;
    for (unsigned n = 1; n <= N; ++n) members.push_back(FunctionHandle::constant(value(n)));
    return GlueSpec{N, bp, members, FunctionHandle::constant(0), make_pinned_roughener(bp, terms)};
}

}  // namespace

TEST_CASE("default glue breakpoints") {
    const auto bp = default_glue_breakpoints(3);
    REQUIRE(bp.size() == 4);
    // (1/3, 1/2) has quartiles 3/8, 5/12, 11/24
    CHECK(bp[0].a == Rational(3, 8));
    CHECK(bp[0].b == Rational(5, 12));
    CHECK(bp[0].c == Rational(11, 24));
    for (unsigned n = 1; n <= 4; ++n) {
        CHECK(Rational(1, n + 2) < bp[n - 1].a);
        CHECK(bp[n - 1].c < Rational(1, n + 1));
    }
}

TEST_CASE("pinned roughener") {
    const auto bp = default_glue_breakpoints(4);
    const unsigned K = 8;
    const PiecewiseLinear z = make_pinned_roughener(bp, K);
    CHECK(z.domain() == Interval{0, 1});
    CHECK(z(0) == 0);
    for (const auto& p : bp) {
        CHECK(z(p.b) == 0);
        CHECK(z(p.c) == 0);
    }
    CHECK(z.sup_abs() <= 1);
    CHECK(z.sup_abs() == 1);

    // 1/3 of the way through [b_1, c_1]
    Rational top = 0;
    for (unsigned j = 0; j <= (1u << K); ++j) top = max(top, takagi_partial(make_rational(j, 1 << K), K));
    const Rational at = bp[0].b + (bp[0].c - bp[0].b) / 3;
    CHECK(z(at) == takagi_partial(Rational(1, 3), K) / top);
    CHECK(abs(Rational(z(at) - Rational(2, 3) / top)) <= Rational(1, 1 << K) / top);
    CHECK(top <= Rational(2, 3));
}

TEST_CASE("glue with zero members collapses to the roughener") {
    const unsigned N = 4;
    const GlueSpec spec = constant_spec(N, 6, [](unsigned) { return Rational(0); });
    const GlueResult r = glue_translation(spec, uniform_grid(0, 1, 100), Rational(1, 100));
    CHECK(r.report.continuous());
    CHECK(r.report.flat_on_I1());
    for (const auto& x : r.h.breakpoints()) {
        Rational expect = 0;
        for (unsigned n = 1; n <= N; ++n) {
            const auto& p = spec.breakpoints[n - 1];
            if (p.b <= x && x <= p.c) expect = -spec.roughener(x) / n;
        }
        CHECK(r.h(x) == expect);
    }
}

TEST_CASE("glue with converging constants is continuous and flat on I1") {
    const unsigned N = 6;
    const GlueSpec spec = constant_spec(N, 8, [](unsigned n) { return Rational(1, n); });
    const auto grid = uniform_grid(0, 1, 3000);
    const GlueResult r = glue_translation(spec, grid, Rational(1, 100));
    CHECK(r.report.breakpoints.size() == 3 * N + 1);
    for (const auto& b : r.report.breakpoints) {
        INFO(b.label);
        CHECK(b.left == b.right);
    }
    CHECK(r.report.flat.size() > 2 * N);
    for (const auto& f : r.report.flat) CHECK(f.difference == 0);

    // h is continuous as a sampled PL: values at breakpoints match both formulas
    const auto& bp = spec.breakpoints;
    CHECK(r.h(bp[0].c) == 1);
    CHECK(r.h(1) == 1);
    CHECK(r.h(bp[N].c) == 0);
    CHECK(r.h(0) == 0);
    // ramp on J_1 from f_2 + 0 at c_2 to f_1 at a_1
    const Rational mid = (bp[1].c + bp[0].a) / 2;
    CHECK(r.h(mid) == Rational(1, 2) + Rational(1, 4));
}

TEST_CASE("glue spec validation") {
    GlueSpec spec = constant_spec(3, 4, [](unsigned) { return Rational(0); });
    spec.roughener = PiecewiseLinear::constant(Rational(1, 2));
    CHECK(kind_of([&] { validate(spec); }) == ErrorKind::argument);
    spec = constant_spec(3, 4, [](unsigned) { return Rational(0); });
    spec.breakpoints[1].a = Rational(1, 4);
    CHECK(kind_of([&] { validate(spec); }) == ErrorKind::argument);
    spec = constant_spec(3, 4, [](unsigned) { return Rational(0); });
    spec.members.pop_back();
    CHECK(kind_of([&] { glue_translation(spec, {0, 1}, Rational(1, 10)); }) == ErrorKind::argument);
}

TEST_CASE("PlSurface evaluation and gradients") {
    const PlSurface p = PlSurface::plane(1, 5, -2);
    CHECK(p(Rational(1, 3), Rational(1, 2)) == 1 + Rational(5, 3) - 1);
    CHECK(p.max_gradient_squared() == 29);
    for (const auto& piece : p.pieces()) {
        CHECK(piece.gx == 5);
        CHECK(piece.gy == -2);
    }
    CHECK(kind_of([&] { p(Rational(2), 0); }) == ErrorKind::domain);

    // nodes are reproduced and each triangle is planar
    std::mt19937_64 rng(5);
    const PlSurface s = PlSurface::random(rng, 4);
    for (std::size_t i = 0; i < s.xs().size(); ++i)
        for (std::size_t j = 0; j < s.ys().size(); ++j) CHECK(s(s.xs()[i], s.ys()[j]) == s.values()[i][j]);
    CHECK(s.max_gradient_squared() < 100);
    const Rational x0(1, 16), y0(1, 32);  // lower triangle of cell (0, 0)
    const auto& lower = s.pieces()[0];
    CHECK(s(x0, y0) == s.values()[0][0] + lower.gx * x0 + lower.gy * y0);
}

TEST_CASE("escape perturbation examples") {
    const EscapeResult zero = escape_perturbation(PlSurface::plane(0, 0, 0), 2, 1);
    CHECK(zero.report.m == 3);
    CHECK(zero.report.minimal);
    CHECK(zero.report.distance == Rational(1, 2));
    CHECK(zero.report.certified());
    // g = 0: f is the sawtooth (eps/2) dist(3x, Z)
    CHECK(zero.f(Rational(1, 6), 0, Rational(1, 10)) == Enclosure::point(Rational(1, 2)));

    const EscapeResult plane = escape_perturbation(PlSurface::plane(0, 5, 0), 1, 2);
    CHECK(plane.report.m == 43);
    CHECK(plane.report.minimal);
    CHECK(plane.report.certified());

    CHECK(kind_of([] { escape_perturbation(PlSurface::plane(0, 0, 0), 0, 1); }) == ErrorKind::precondition);
    CHECK(kind_of([] { escape_perturbation(PlSurface::plane(0, 0, 0), 1, 0); }) == ErrorKind::precondition);
}

TEST_CASE("escape perturbation on random surfaces") {
    std::mt19937_64 rng(11);
    const Rational epsilons[] = {Rational(1, 4), Rational(1), Rational(2)};
    for (int k = 0; k < 20; ++k) {
        const PlSurface g = PlSurface::random(rng, 3);
        for (unsigned n = 1; n <= 5; ++n) {
            for (const auto& eps : epsilons) {
                const EscapeReport r = escape_perturbation(g, eps, n).report;
                CHECK(r.certified());
                // defining inequality through squares, and its failure at m - 1
                const Rational q = eps / 2 * r.m / (n + 1) - n;
                CHECK((q > 0 && q * q > g.max_gradient_squared()));
                const Rational q1 = eps / 2 * (r.m - 1) / (n + 1) - n;
                CHECK_FALSE((q1 > 0 && q1 * q1 > g.max_gradient_squared()));
            }
        }
    }
}

TEST_CASE("escape perturbation moves g by eps/4") {
    std::mt19937_64 rng(13);
    const PlSurface g = PlSurface::random(rng, 2);
    const EscapeResult r = escape_perturbation(g, 1, 2);
    const Rational tol(1, 10);
    Rational sup = 0;
    for (const auto& x : uniform_grid(0, 1, 4 * r.report.m))
        for (const auto& y : uniform_grid(0, 1, 3)) sup = max(sup, abs(Rational(r.f(x, y, tol).lo() - g(x, y))));
    CHECK(sup == Rational(1, 4));
}

TEST_CASE("strip extension of a constant family") {
    std::map<Rational, FunctionHandle2D> family;
    for (const auto& c : level_points(3).D) family.emplace(c, FunctionHandle2D::constant(7));
    const StripExtension ext = tietze_strip_extension(family, 2, uniform_grid(0, 1, 4), Rational(1, 10));
    CHECK(ext.report.passed());
    testing::RationalGen gen(17);
    for (int i = 0; i < 100; ++i) CHECK(ext.F(gen.unit(), gen.unit(), Rational(1, 10)) == Enclosure::point(7));
}

TEST_CASE("strip extension reproduces and interpolates") {
    std::map<Rational, FunctionHandle2D> family;
    for (const auto& c : level_points(6).D) {
        family.emplace(c, FunctionHandle2D("phi", {0, 1}, {0, 1}, [c](const Rational& x, const Rational& y, const Rational&) {
                           return Enclosure::point(c * c + x * y);
                       }));
    }
    const auto ys = uniform_grid(0, 1, 9);
    const StripExtension ext = tietze_strip_extension(family, 5, ys, Rational(1, 100));
    CHECK(ext.represented.size() == 64);
    CHECK(ext.report.reproduction.size() == 64 * 10);
    CHECK(ext.report.midpoints.size() == 63 * 10);
    CHECK(ext.report.passed());
    // the middle gap (1/3, 2/3)
    for (const auto& y : ys) {
        const Enclosure mid = ext.F(Rational(1, 2), y, Rational(1, 100));
        const Enclosure avg = (ext.F(Rational(1, 3), y, Rational(1, 100)) + ext.F(Rational(2, 3), y, Rational(1, 100))) *
                              Rational(1, 2);
        CHECK(mid == avg);
    }
}

TEST_CASE("strip extension errors") {
    std::map<Rational, FunctionHandle2D> family;
    for (const auto& c : level_points(2).D) family.emplace(c, FunctionHandle2D::constant(0));
    CHECK(kind_of([&] { tietze_strip_extension(family, 2, {0}, Rational(1, 10)); }) == ErrorKind::argument);
    const StripExtension ext = tietze_strip_extension(family, 1, {0}, Rational(1, 10));
    CHECK(kind_of([&] { ext.F(Rational(3, 2), 0, Rational(1, 10)); }) == ErrorKind::domain);
}
