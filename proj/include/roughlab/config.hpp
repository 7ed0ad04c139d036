#pragma once

#include <cstddef>

namespace roughlab {

// Caps bounding exact computations. ROUGHLAB_MAX_DEPTH, when set to a
// positive integer, replaces both max_digits and max_levels.
struct Limits {
    std::size_t max_digits = 32;
    std::size_t max_levels = 12;
    std::size_t takagi_period_cap = 64;
    std::size_t orbit_cap = 1u << 20;
};

// Defaults with the environment override applied. Read once per process.
const Limits& limits();

}  // namespace roughlab
