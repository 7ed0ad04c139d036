#include "roughlab/cantor.hpp"

#include "roughlab/error.hpp"

#include <algorithm>
#include <map>

namespace roughlab {

namespace {

Rational pow3_inv(std::size_t k) { return pow(Rational(1, 3), k); }

Rational digits_value(const std::vector<std::uint8_t>& prefix, const std::vector<std::uint8_t>& repeat) {
    Rational v = 0;
    for (std::size_t k = 0; k < prefix.size(); ++k) v += Rational(prefix[k]) * pow3_inv(k + 1);
    if (!repeat.empty()) {
        // 0.(block) in base 3 = B / (3^p - 1)
        Integer block = 0;
        for (auto d : repeat) block = block * 3 + d;
        Integer denom;
        mpz_ui_pow_ui(denom.get_mpz_t(), 3, repeat.size());
        denom -= 1;
        v += make_rational(block, denom) * pow3_inv(prefix.size());
    }
    return v;
}

void check_digits(const std::vector<std::uint8_t>& ds) {
    for (auto d : ds)
        if (d != 0 && d != 2) fail(ErrorKind::argument, "cantor digit " + std::to_string(d) + " not in {0, 2}");
}

}  // namespace

CantorPoint::CantorPoint(std::vector<std::uint8_t> prefix, std::vector<std::uint8_t> repeat, std::size_t max_digits)
    : prefix_(std::move(prefix)), repeat_(std::move(repeat)) {
    check_digits(prefix_);
    check_digits(repeat_);
    if (prefix_.size() + repeat_.size() > max_digits)
        fail(ErrorKind::capacity, "cantor point with " + std::to_string(prefix_.size() + repeat_.size()) +
                                      " digits exceeds cap " + std::to_string(max_digits));
    value_ = digits_value(prefix_, repeat_);
}

CantorPoint::CantorPoint(Unchecked, std::vector<std::uint8_t> prefix, std::vector<std::uint8_t> repeat)
    : prefix_(std::move(prefix)), repeat_(std::move(repeat)), value_(digits_value(prefix_, repeat_)) {}

CantorPoint CantorPoint::from_rational(const Rational& q) {
    if (q < 0 || q > 1) fail(ErrorKind::domain, "cantor: " + to_string(q) + " outside [0, 1]");
    if (q == 1) return CantorPoint(Unchecked{}, {}, {2});
    std::vector<std::uint8_t> digits;
    std::map<Rational, std::size_t> seen;
    Rational r = q;
    const std::size_t cap = limits().orbit_cap;
    while (true) {
        if (r == 0) return CantorPoint(Unchecked{}, std::move(digits), {});
        if (auto it = seen.find(r); it != seen.end()) {
            std::vector<std::uint8_t> prefix(digits.begin(), digits.begin() + static_cast<long>(it->second));
            std::vector<std::uint8_t> repeat(digits.begin() + static_cast<long>(it->second), digits.end());
            return CantorPoint(Unchecked{}, std::move(prefix), std::move(repeat));
        }
        if (digits.size() >= cap) fail(ErrorKind::capacity, "cantor: ternary orbit of " + to_string(q) + " too long");
        seen.emplace(r, digits.size());
        const Rational t = 3 * r;
        const Integer d = floor(t);
        r = t - Rational(d);
        if (d == 1) {
            // ...1000... equals ...0222...; any other 1 excludes q
            if (r == 0) {
                digits.push_back(0);
                return CantorPoint(Unchecked{}, std::move(digits), {2});
            }
            fail(ErrorKind::argument, "cantor: " + to_string(q) + " is not in the Cantor set");
        }
        digits.push_back(static_cast<std::uint8_t>(d.get_ui()));
    }
}

std::uint8_t CantorPoint::digit(std::size_t k) const {
    if (k == 0) fail(ErrorKind::argument, "cantor digits are 1-based");
    if (k <= prefix_.size()) return prefix_[k - 1];
    if (repeat_.empty()) return 0;
    return repeat_[(k - 1 - prefix_.size()) % repeat_.size()];
}

bool CantorPoint::has_infinitely_many_zeros() const {
    return repeat_.empty() || std::find(repeat_.begin(), repeat_.end(), 0) != repeat_.end();
}

std::vector<std::size_t> CantorPoint::zero_positions(std::size_t count) const {
    std::vector<std::size_t> out;
    out.reserve(count);
    for (std::size_t k = 1; k <= prefix_.size() && out.size() < count; ++k)
        if (prefix_[k - 1] == 0) out.push_back(k);
    if (out.size() < count && !has_infinitely_many_zeros())
        fail(ErrorKind::exhaustion, "cantor point " + to_string(value_) + " has only " + std::to_string(out.size()) +
                                        " zero digits, " + std::to_string(count) + " requested");
    for (std::size_t k = prefix_.size() + 1; out.size() < count; ++k)
        if (digit(k) == 0) out.push_back(k);
    return out;
}

CantorPoint CantorPoint::mirrored() const {
    auto flip = [](std::vector<std::uint8_t> ds) {
        for (auto& d : ds) d = static_cast<std::uint8_t>(2 - d);
        return ds;
    };
    std::vector<std::uint8_t> repeat = repeat_.empty() ? std::vector<std::uint8_t>{2} : flip(repeat_);
    return CantorPoint(Unchecked{}, flip(prefix_), std::move(repeat));
}

bool cantor_contains(const Rational& q) {
    try {
        CantorPoint::from_rational(q);
        return true;
    } catch (const Error& e) {
        if (e.kind() == ErrorKind::argument) return false;
        throw;
    }
}

LevelSets level_points(unsigned n, std::size_t max_levels) {
    if (n == 0) fail(ErrorKind::argument, "levels start at 1");
    if (n > max_levels)
        fail(ErrorKind::capacity, "level " + std::to_string(n) + " exceeds cap " + std::to_string(max_levels));
    LevelSets out;
    out.n = n;
    if (n == 1) {
        out.D = {0, 1};
        out.E = out.D;
        return out;
    }
    // endpoints of the 2^(n-1) intervals of length 3^-(n-1)
    const unsigned depth = n - 1;
    const Rational len = pow3_inv(depth);
    std::vector<Rational> left{0};
    for (unsigned k = 1; k <= depth; ++k) {
        const Rational step = 2 * pow3_inv(k);
        const std::size_t size = left.size();
        for (std::size_t i = 0; i < size; ++i) left.push_back(left[i] + step);
    }
    std::sort(left.begin(), left.end());
    for (const auto& l : left) {
        out.D.push_back(l);
        out.D.push_back(l + len);
    }
    std::sort(out.D.begin(), out.D.end());
    const LevelSets prev = level_points(n - 1, max_levels);
    std::set_difference(out.D.begin(), out.D.end(), prev.D.begin(), prev.D.end(), std::back_inserter(out.E));
    return out;
}

unsigned level_of(const Rational& d) {
    if (d == 0 || d == 1) return 1;
    if (!cantor_contains(d)) fail(ErrorKind::argument, to_string(d) + " is not a Cantor point");
    Integer den = d.get_den();
    unsigned k = 0;
    while (den % 3 == 0) {
        den /= 3;
        ++k;
    }
    if (den != 1) fail(ErrorKind::argument, to_string(d) + " has no finite ternary expansion");
    return k + 1;
}

Rational neighborhood_radius(unsigned n) { return (pow3_inv(n - 1) + pow3_inv(n + 1)) / 2; }

Interval neighborhood(const Rational& d, unsigned n) {
    if (n == 0 || level_of(d) != n)
        fail(ErrorKind::argument, to_string(d) + " is not in E_" + std::to_string(n));
    const Rational rho = neighborhood_radius(n);
    return {max(Rational(0), Rational(d - rho)), min(Rational(1), Rational(d + rho))};
}

Interval neighborhood(const Rational& d) { return neighborhood(d, level_of(d)); }

std::vector<Rational> approach_sequence(const CantorPoint& c, std::size_t count) {
    if (c.value() >= 1) fail(ErrorKind::precondition, "approach sequence needs c < 1");
    if (count == 0) return {};
    const std::vector<std::size_t> zeros = c.zero_positions(count / 2);
    std::vector<Rational> out{Rational(1)};
    Rational base = 1;  // 1 - sum_{j<k} 2/3^i_j
    for (std::size_t k = 1; out.size() < count; ++k) {
        const Rational step = pow3_inv(zeros[k - 1]);
        out.push_back(base - step);
        if (out.size() < count) out.push_back(base - 2 * step);
        base -= 2 * step;
    }
    // d_(2k+1) lands on c when i_k is the last zero digit
    if (out.back() <= c.value())
        fail(ErrorKind::exhaustion, "cantor point " + to_string(c.value()) + " runs out of zero digits before d_" +
                                        std::to_string(count));
    return out;
}

std::vector<Rational> left_approach_sequence(const CantorPoint& c, std::size_t count) {
    std::vector<Rational> out = approach_sequence(c.mirrored(), count);
    for (auto& d : out) d = 1 - d;
    return out;
}

std::vector<ApproachCheck> approach_inequality_check(const CantorPoint& c, std::size_t count) {
    const std::vector<Rational> d = approach_sequence(c, count);
    std::vector<ApproachCheck> out;
    for (std::size_t m = 1; m < d.size(); ++m) {
        ApproachCheck rec;
        rec.m = m;
        rec.d_m = d[m - 1];
        rec.d_next = d[m];
        rec.sup_neighborhood = neighborhood(rec.d_next).hi;
        rec.threshold = c.value() + (rec.d_m - c.value()) / 4;
        rec.holds = rec.sup_neighborhood > rec.threshold;
        out.push_back(std::move(rec));
    }
    return out;
}

}  // namespace roughlab
