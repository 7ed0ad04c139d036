#pragma once

#include "roughlab/rational.hpp"

#include <cstdint>
#include <random>

namespace roughlab::testing {

// Deterministic rational generator for property tests.
class RationalGen {
public:
    explicit RationalGen(std::uint64_t seed) : rng_(seed) {}

    Rational any(long max_num = 1000000, long max_den = 1000000) {
        std::uniform_int_distribution<long> num(-max_num, max_num);
        std::uniform_int_distribution<long> den(1, max_den);
        return make_rational(num(rng_), den(rng_));
    }

    // Uniform-ish rational in [0, 1].
    Rational unit(long max_den = 100000) {
        std::uniform_int_distribution<long> den(1, max_den);
        const long d = den(rng_);
        std::uniform_int_distribution<long> num(0, d);
        return make_rational(num(rng_), d);
    }

    long integer(long lo, long hi) {
        std::uniform_int_distribution<long> dist(lo, hi);
        return dist(rng_);
    }

    std::mt19937_64& engine() { return rng_; }

private:
    std::mt19937_64 rng_;
};

}  // namespace roughlab::testing
