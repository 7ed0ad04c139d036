#include <doctest.h>

#include "roughlab/cantor.hpp"
#include "roughlab/error.hpp"
#include "support.hpp"

#include <algorithm>
#include <set>

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

std::vector<Rational> rationals(std::initializer_list<std::pair<long, long>> xs) {
    std::vector<Rational> out;
    for (auto [p, q] : xs) out.push_back(make_rational(p, q));
    return out;
}

// Independent oracle: the closed intervals of level n of the middle-thirds
// construction, listed by their endpoints.
std::set<Rational> interval_endpoints(unsigned levels) {
    std::vector<std::pair<Rational, Rational>> cur{{Rational(0), Rational(1)}};
    for (unsigned k = 0; k < levels; ++k) {
        std::vector<std::pair<Rational, Rational>> next;
        for (auto& [a, b] : cur) {
            const Rational third = (b - a) / 3;
            next.emplace_back(a, a + third);
            next.emplace_back(b - third, b);
        }
        cur = std::move(next);
    }
    std::set<Rational> out;
    for (auto& [a, b] : cur) {
        out.insert(a);
        out.insert(b);
    }
    return out;
}

CantorPoint random_point(testing::RationalGen& gen, std::size_t depth) {
    std::vector<std::uint8_t> digits;
    for (std::size_t k = 0; k < depth; ++k) digits.push_back(gen.integer(0, 1) ? 2 : 0);
    return CantorPoint(digits);
}

}  // namespace

TEST_CASE("cantor_contains examples") {
    CHECK(cantor_contains(Rational(1, 4)));
    CHECK_FALSE(cantor_contains(Rational(1, 2)));
    CHECK(cantor_contains(Rational(1, 3)));
    CHECK(cantor_contains(Rational(0)));
    CHECK(cantor_contains(Rational(1)));
    CHECK(cantor_contains(Rational(3, 4)));
    CHECK_FALSE(cantor_contains(Rational(4, 9)));
    CHECK(kind_of([] { cantor_contains(Rational(4, 3)); }) == ErrorKind::domain);
}

TEST_CASE("membership agrees with the interval construction at triadic points") {
    const std::set<Rational> ends = interval_endpoints(5);
    for (long i = 0; i <= 243; ++i) {
        const Rational q = make_rational(i, 243);
        // a triadic q lies in C iff it lies in one of the level-5 intervals
        bool inside = ends.count(q) > 0;
        if (!inside) {
            auto it = ends.upper_bound(q);
            const long index = std::distance(ends.begin(), it);
            inside = it != ends.end() && index % 2 == 1;
        }
        CHECK(cantor_contains(q) == inside);
    }
}

TEST_CASE("from_rational round trip") {
    testing::RationalGen gen(67);
    int members = 0;
    for (int i = 0; i < 2000; ++i) {
        const Rational q = gen.unit(800);
        if (!cantor_contains(q)) {
            CHECK(kind_of([&] { CantorPoint::from_rational(q); }) == ErrorKind::argument);
            continue;
        }
        ++members;
        CHECK(CantorPoint::from_rational(q).value() == q);
    }
    CHECK(members > 20);
    CHECK(CantorPoint::from_rational(Rational(1, 3)).digit(1) == 0);
    CHECK(CantorPoint::from_rational(Rational(1, 3)).digit(5) == 2);
    CHECK(CantorPoint::from_rational(Rational(1, 4)).digit(2) == 2);
}

TEST_CASE("CantorPoint digits and value") {
    const CantorPoint p({2, 0}, {0, 2});
    CHECK(p.digit(1) == 2);
    CHECK(p.digit(3) == 0);
    CHECK(p.digit(4) == 2);
    CHECK(p.value() == Rational(2, 3) + Rational(1, 9) * Rational(1, 4));
    CHECK(p.has_infinitely_many_zeros());
    CHECK_FALSE(CantorPoint({0}, {2}).has_infinitely_many_zeros());
    CHECK(p.zero_positions(3) == std::vector<std::size_t>{2, 3, 5});
    CHECK(kind_of([] { CantorPoint({0}, {2}).zero_positions(2); }) == ErrorKind::exhaustion);
    CHECK(kind_of([] { CantorPoint({1}); }) == ErrorKind::argument);
    CHECK(kind_of([] { CantorPoint(std::vector<std::uint8_t>(40, 0)); }) == ErrorKind::capacity);
    CHECK(p.mirrored().value() == 1 - p.value());
    CHECK(CantorPoint({2}).mirrored().value() == Rational(1, 3));
}

TEST_CASE("level_points examples") {
    const LevelSets l1 = level_points(1);
    CHECK(l1.D == rationals({{0, 1}, {1, 1}}));
    CHECK(l1.E == l1.D);
    const LevelSets l2 = level_points(2);
    CHECK(l2.D == rationals({{0, 1}, {1, 3}, {2, 3}, {1, 1}}));
    CHECK(l2.E == rationals({{1, 3}, {2, 3}}));
    const LevelSets l3 = level_points(3);
    CHECK(l3.D.size() == 8);
    CHECK(l3.E == rationals({{1, 9}, {2, 9}, {7, 9}, {8, 9}}));
    CHECK(kind_of([] { level_points(13); }) == ErrorKind::capacity);
    CHECK(kind_of([] { level_points(0); }) == ErrorKind::argument);
}

TEST_CASE("level sizes and agreement with the interval construction") {
    for (unsigned n = 1; n <= 12; ++n) {
        const LevelSets l = level_points(n);
        CHECK(l.D.size() == (std::size_t{1} << n));
        if (n >= 2) CHECK(l.E.size() == (std::size_t{1} << (n - 1)));
        CHECK(std::is_sorted(l.D.begin(), l.D.end()));
        if (n <= 8) {
            const std::set<Rational> ends = interval_endpoints(n - 1);
            CHECK(std::vector<Rational>(ends.begin(), ends.end()) == l.D);
        }
        for (const Rational& d : l.E) CHECK(level_of(d) == n);
    }
}

TEST_CASE("neighborhood examples") {
    CHECK(neighborhood(Rational(0), 1) == Interval{0, Rational(5, 9)});
    CHECK(neighborhood(Rational(1, 3), 2) == Interval{Rational(4, 27), Rational(14, 27)});
    CHECK(neighborhood(Rational(2, 3), 2) == Interval{Rational(13, 27), Rational(23, 27)});
    CHECK(neighborhood(Rational(1)) == Interval{Rational(4, 9), 1});
    CHECK(neighborhood_radius(2) == Rational(5, 27));
    CHECK(kind_of([] { neighborhood(Rational(1, 3), 3); }) == ErrorKind::argument);
    CHECK(kind_of([] { neighborhood(Rational(1, 2)); }) == ErrorKind::argument);
}

TEST_CASE("neighborhoods separate level points") {
    for (unsigned n = 1; n <= 8; ++n) {
        const LevelSets l = level_points(n);
        for (const Rational& d : l.E) {
            const Interval u = neighborhood(d, n);
            for (const Rational& e : l.D) CHECK(u.contains(e) == (e == d));
        }
    }
}

TEST_CASE("approach_sequence examples") {
    CHECK(approach_sequence(CantorPoint({0}), 5) == rationals({{1, 1}, {2, 3}, {1, 3}, {2, 9}, {1, 9}}));
    const auto seq = approach_sequence(CantorPoint({2}), 3);
    CHECK(seq == rationals({{1, 1}, {8, 9}, {7, 9}}));
    CHECK(kind_of([] { approach_sequence(CantorPoint({2}, {2}), 1); }) == ErrorKind::precondition);
    // c = 1/3 = 0.0222...: one zero digit gives d_1, d_2 only
    CHECK(approach_sequence(CantorPoint({0}, {2}), 2) == rationals({{1, 1}, {2, 3}}));
    CHECK(kind_of([] { approach_sequence(CantorPoint({0}, {2}), 3); }) == ErrorKind::exhaustion);
    CHECK(kind_of([] { approach_sequence(CantorPoint({0, 0}, {2}), 6); }) == ErrorKind::exhaustion);
}

TEST_CASE("approach sequences decrease to c") {
    testing::RationalGen gen(71);
    for (int i = 0; i < 30; ++i) {
        const CantorPoint c = random_point(gen, 24);
        const std::size_t count = 21;
        const auto seq = approach_sequence(c, count);
        const auto zeros = c.zero_positions(count / 2);
        for (std::size_t m = 0; m < count; ++m) {
            CHECK(seq[m] > c.value());
            CHECK(cantor_contains(seq[m]));
            level_of(seq[m]);
            if (m + 1 < count) CHECK(seq[m + 1] < seq[m]);
        }
        // d_(2k+1) - c <= 3^-i_k
        for (std::size_t k = 1; 2 * k < count; ++k)
            CHECK(seq[2 * k] - c.value() <= pow(Rational(1, 3), zeros[k - 1]));

        // a finite expansion has finitely many 2s, so approach from the left through a periodic tail
        const CantorPoint p(c.prefix(), {2, 0});
        const auto left = left_approach_sequence(p, count);
        for (std::size_t m = 0; m < count; ++m) {
            CHECK(left[m] < p.value());
            if (m + 1 < count) CHECK(left[m + 1] > left[m]);
        }
    }
}

TEST_CASE("approach_inequality_check") {
    const auto at0 = approach_inequality_check(CantorPoint({0}), 11);
    REQUIRE(at0.size() == 10);
    CHECK(at0[0].sup_neighborhood == Rational(23, 27));
    CHECK(at0[0].threshold == Rational(1, 4));
    for (const auto& r : at0) CHECK(r.holds);

    testing::RationalGen gen(73);
    for (int i = 0; i < 20; ++i) {
        const CantorPoint c = random_point(gen, 30);
        for (const auto& r : approach_inequality_check(c, 21)) {
            CHECK(r.holds);
            CHECK(r.sup_neighborhood > r.threshold);
        }
    }
}
