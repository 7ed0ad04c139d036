#include "roughlab/config.hpp"

#include <cstdlib>
#include <string>

namespace roughlab {

namespace {

Limits load_limits() {
    Limits out;
    if (const char* env = std::getenv("ROUGHLAB_MAX_DEPTH")) {
        try {
            const long v = std::stol(env);
            if (v > 0) {
                out.max_digits = static_cast<std::size_t>(v);
                out.max_levels = static_cast<std::size_t>(v);
            }
        } catch (const std::exception&) {
            // malformed override: keep defaults
        }
    }
    return out;
}

}  // namespace

const Limits& limits() {
    static const Limits value = load_limits();
    return value;
}

}  // namespace roughlab
