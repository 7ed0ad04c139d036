#pragma once

#include "roughlab/enclosure.hpp"

#include <string_view>

namespace roughlab {

enum class Verdict { certified, failed, undecided };

const char* to_string(Verdict v) noexcept;
// Throws Error(argument) for an unknown name.
Verdict parse_verdict(std::string_view name);

inline Verdict from_tri(Tri t) {
    switch (t) {
    case Tri::yes: return Verdict::certified;
    case Tri::no: return Verdict::failed;
    case Tri::unknown: break;
    }
    return Verdict::undecided;
}

}  // namespace roughlab
