#pragma once

#include <stdexcept>
#include <string>

namespace roughlab {

enum class ErrorKind {
    domain,        // argument outside the operation's domain
    capacity,      // configured depth/period cap exceeded
    argument,      // structurally invalid argument
    undecided,     // enclosure comparison undecided at the requested tolerance
    precondition,  // documented precondition violated
    range,         // derived quantity fell outside its admissible range
    construction,  // a construction step is infeasible
    exhaustion,    // a sequence ran out of elements
    usage,         // malformed CLI input
};

const char* to_string(ErrorKind kind) noexcept;

class Error : public std::runtime_error {
public:
    Error(ErrorKind kind, const std::string& what)
        : std::runtime_error(what), kind_(kind) {}

    ErrorKind kind() const noexcept { return kind_; }

private:
    ErrorKind kind_;
};

[[noreturn]] inline void fail(ErrorKind kind, const std::string& what) {
    throw Error(kind, what);
}

}  // namespace roughlab
