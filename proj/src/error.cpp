#include "roughlab/error.hpp"

namespace roughlab {

const char* to_string(ErrorKind kind) noexcept {
    switch (kind) {
    case ErrorKind::domain: return "domain";
    case ErrorKind::capacity: return "capacity";
    case ErrorKind::argument: return "argument";
    case ErrorKind::undecided: return "undecided";
    case ErrorKind::precondition: return "precondition";
    case ErrorKind::range: return "range";
    case ErrorKind::construction: return "construction";
    case ErrorKind::exhaustion: return "exhaustion";
    case ErrorKind::usage: return "usage";
    }
    return "unknown";
}

}  // namespace roughlab
