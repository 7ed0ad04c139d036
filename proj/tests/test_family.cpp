#include <doctest.h>

#include "roughlab/error.hpp"
#include "roughlab/pathology.hpp"
#include "roughlab/sandwich.hpp"

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

const FunctionHandle zero = FunctionHandle::constant(0);

}  // namespace

TEST_CASE("psi examples") {
    CHECK(psi(Rational(8, 9), Rational(2, 3)) == Rational(8, 81));
    CHECK(psi(Rational(5), Rational(0)) == 0);
    // 1/3 = 0.0222...: sum_{k>=2} 9^-k
    CHECK(psi(Rational(1), Rational(1, 3)) == Rational(1, 72));
    CHECK(psi(Rational(1), Rational(1)) == Rational(1, 8));
}

TEST_CASE("fixture family members") {
    const AdmissibleFamily fam = make_admissible_family(zero, 3, Rational(8, 9));
    CHECK(fam.points.size() == 8);
    CHECK(fam.member(Rational(2, 3))(Rational(1, 5), Rational(1, 10)) == Enclosure::point(Rational(8, 81)));
    CHECK(fam.member(Rational(0))(Rational(1, 2), Rational(1, 10)) == Enclosure::point(Rational(0)));
    CHECK(kind_of([&] { fam.member(Rational(1, 2)); }) == ErrorKind::argument);
    CHECK(kind_of([] { make_admissible_family(zero, 2, Rational(-1)); }) == ErrorKind::precondition);
}

TEST_CASE("psi satisfies condition 1 on D_4 at theta = 8/9") {
    const auto D = level_points(4).D;
    for (const auto& d : D)
        for (const auto& e : D)
            CHECK(abs(Rational(psi(Rational(8, 9), d) - psi(Rational(8, 9), e))) <= (d - e) * (d - e));
}

TEST_CASE("interval helpers") {
    CHECK(distance(Rational(0), Interval{Rational(4, 27), Rational(14, 27)}) == Rational(4, 27));
    CHECK(distance(Rational(1, 5), Interval{0, 1}) == 0);
    CHECK(!overlap(Interval{0, Rational(1, 3)}, Interval{Rational(1, 2), 1}));
    CHECK(*overlap(Interval{0, Rational(5, 9)}, Interval{Rational(4, 9), 1}) == Interval{Rational(4, 9), Rational(5, 9)});
    // minimiser at the midpoint 1/2 inside the overlap
    CHECK(overlap_infimum(0, 1, Interval{Rational(4, 9), Rational(5, 9)}) == Rational(1, 2));
    // clipped minimiser
    CHECK(overlap_infimum(0, 1, Interval{Rational(3, 4), 1}) == Rational(9, 16) + Rational(1, 16));
}

TEST_CASE("family conditions at theta = 0 pass") {
    const FamilyReport r = check_family_conditions(make_admissible_family(zero, 3, 0), triadic_grid(5), Rational(1, 1000));
    CHECK(r.passed());
    CHECK(r.records.size() > 28);
    for (const auto& rec : r.records) CHECK(rec.verdict == Verdict::certified);
}

TEST_CASE("theta star certifies and is maximal at 40 bits") {
    const auto grid = triadic_grid(5);
    const Rational eps(1, 1000);
    const FamilyReport r = check_family_conditions(make_admissible_family(zero, 3, 1), grid, eps);
    CHECK_FALSE(r.passed());
    REQUIRE(r.theta_star);
    CHECK(*r.theta_star > 0);
    CHECK(check_family_conditions(make_admissible_family(zero, 3, *r.theta_star), grid, eps).passed());
    const Rational above = *r.theta_star + pow(Rational(1, 2), 40);
    CHECK_FALSE(check_family_conditions(make_admissible_family(zero, 3, above), grid, eps).passed());
    // the binding pair is 1/3, 2/3 under condition 3: theta * 7/72 < (1/5)(4/27)^2
    CHECK(*r.theta_star < Rational(16, 3645) / Rational(7, 72));
}

TEST_CASE("theta star is independent of a shared base") {
    const auto grid = triadic_grid(4);
    const FunctionHandle base = FunctionHandle::from_pl(PiecewiseLinear::identity());
    const Rational eps(1, 1000);
    CHECK(check_family_conditions(make_admissible_family(base, 2, 1), grid, eps).theta_star ==
          check_family_conditions(make_admissible_family(zero, 2, 1), grid, eps).theta_star);
}

TEST_CASE("family violating condition 1 names a pair") {
    const AdmissibleFamily fam = make_family(3, [](const Rational& d) { return FunctionHandle::constant(d); });
    const FamilyReport r = check_family_conditions(fam, triadic_grid(5), Rational(1, 1000));
    CHECK_FALSE(r.passed());
    CHECK_FALSE(r.theta_star);
    bool named = false;
    for (const auto& rec : r.records)
        if (rec.condition == 1 && rec.verdict == Verdict::failed) named = rec.d < rec.d2;
    CHECK(named);
}

TEST_CASE("family conditions need grid points in overlaps") {
    const AdmissibleFamily fam = make_admissible_family(zero, 3, 0);
    CHECK(kind_of([&] { check_family_conditions(fam, {0, 1}, Rational(1, 10)); }) == ErrorKind::precondition);
}

TEST_CASE("undecided family condition asks for a tighter eps") {
    // |f_0 - f_1| is enclosed around the condition 1 bound (0 - 1)^2
    const FunctionHandle fuzzy("fuzzy", {0, 1}, [](const Rational&, const Rational& eps) {
        return Enclosure::around(1, eps);
    });
    const AdmissibleFamily fam = make_family(1, [&](const Rational& d) {
        return d == 0 ? fuzzy : FunctionHandle::constant(0);
    });
    CHECK(kind_of([&] { check_family_conditions(fam, triadic_grid(4), Rational(1, 4)); }) == ErrorKind::undecided);
}

TEST_CASE("build_g with equal members reproduces the base") {
    const FunctionHandle base = FunctionHandle::from_pl(PiecewiseLinear({0, Rational(1, 2), 1}, {0, 1, Rational(1, 3)}));
    const auto grid = triadic_grid(4);
    const SandwichCertificate cert = build_g(make_admissible_family(base, 3, 0), grid, Rational(1, 100));
    CHECK(cert.valid());
    for (const auto& x : grid) CHECK(cert.g(x) == base(x, Rational(1, 100)).lo());
    for (const auto& r : cert.records) CHECK(r.deviation == Enclosure::point(0));
}

TEST_CASE("build_g at depth 1 follows the two members") {
    const auto grid = triadic_grid(5);
    const Rational eps(1, 1000);
    const auto theta = *check_family_conditions(make_admissible_family(zero, 1, 1), grid, eps).theta_star;
    const AdmissibleFamily fam = make_admissible_family(zero, 1, theta);
    const SandwichCertificate cert = build_g(fam, grid, eps);
    CHECK(cert.valid());
    for (const auto& x : grid) {
        if (x < Rational(4, 9)) CHECK(cert.g(x) == 0);
        if (x > Rational(5, 9)) CHECK(cert.g(x) == psi(theta, 1));
        if (x <= Rational(5, 9)) CHECK(abs(cert.g(x)) <= x * x / 5);
    }
}

TEST_CASE("depth 4 sandwich certificate at theta star") {
    const auto grid = triadic_grid(6);
    const Rational eps(1, 1000000);
    const auto theta = check_family_conditions(make_admissible_family(zero, 4, 1), grid, eps).theta_star;
    REQUIRE(theta);
    const AdmissibleFamily fam = make_admissible_family(takagi_handle(), 4, *theta);
    const SandwichCertificate cert = build_g(fam, grid, eps);
    CHECK(cert.failed() == 0);
    CHECK(cert.undecided() == 0);
    CHECK(cert.records.size() > 730);
    for (const auto& r : cert.records)
        if (r.x != r.d) CHECK(r.deviation.hi() / abs(Rational(r.x - r.d)) <= abs(Rational(r.x - r.d)));

    // every partial sum already honours its own level
    for (unsigned n = 1; n <= 4; ++n) {
        std::vector<Rational> values;
        for (const auto& x : grid) values.push_back(cert.partial_sums[n - 1](x));
        for (const auto& r : sandwich_records(fam, n, grid, values, eps)) CHECK(r.verdict == Verdict::certified);
    }
}

TEST_CASE("build_g reports an empty envelope") {
    // members far apart: |f_0 - f_1| = 1 exceeds x^2 + (1-x)^2 near the middle
    const AdmissibleFamily fam = make_family(1, [](const Rational& d) { return FunctionHandle::constant(d); });
    CHECK(kind_of([&] { build_g(fam, triadic_grid(3), Rational(1, 10)); }) == ErrorKind::construction);
}
