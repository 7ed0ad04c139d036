#include "roughlab/verdict.hpp"

#include "roughlab/error.hpp"

#include <string>

namespace roughlab {

const char* to_string(Verdict v) noexcept {
    switch (v) {
    case Verdict::certified: return "certified";
    case Verdict::failed: return "failed";
    case Verdict::undecided: return "undecided";
    }
    return "?";
}

Verdict parse_verdict(std::string_view name) {
    if (name == "certified") return Verdict::certified;
    if (name == "failed") return Verdict::failed;
    if (name == "undecided") return Verdict::undecided;
    fail(ErrorKind::argument, "unknown verdict '" + std::string(name) + "'");
}

}  // namespace roughlab
