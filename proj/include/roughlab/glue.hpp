#pragma once

#include "roughlab/function_handle.hpp"

#include <string>
#include <vector>

namespace roughlab {

struct GlueBreakpoints {
    Rational a, b, c;
};

// a_n, b_n, c_n at 1/4, 1/2, 3/4 of (1/(n+2), 1/(n+1)) for n = 1..count+1.
std::vector<GlueBreakpoints> default_glue_breakpoints(unsigned count);

struct GlueSpec {
    unsigned count = 0;
    std::vector<GlueBreakpoints> breakpoints;  // n = 1..count+1
    std::vector<FunctionHandle> members;       // f_1..f_count
    FunctionHandle limit;                      // f, also used as f_(count+1)
    PiecewiseLinear roughener;                 // z on [0, 1]
};

// Throws Error(argument) naming the first broken invariant: sizes, a < b < c
// inside (1/(n+2), 1/(n+1)), ||z|| <= 1, z(b_n) = z(c_n) = 0.
void validate(const GlueSpec& spec);

// z = T_K o r / max T_K on every [b_n, c_n], [c_(n+1), b_n] and [c_1, 1],
// and 0 on [0, c_(count+1)], where T_K is the K-term Takagi partial sum and
// r the increasing linear bijection onto [0, 1].
PiecewiseLinear make_pinned_roughener(const std::vector<GlueBreakpoints>& bp, unsigned terms);

struct BreakpointCheck {
    std::string label;  // e.g. "a_3"
    Rational x;
    Rational left;
    Rational right;
    bool equal = false;
};

struct FlatCheck {
    unsigned n = 0;
    Rational x;
    Rational difference;  // (f_n - h)(x)
};

struct GlueReport {
    std::vector<BreakpointCheck> breakpoints;
    std::vector<FlatCheck> flat;
    bool continuous() const;
    bool flat_on_I1() const;
};

struct GlueResult {
    PiecewiseLinear h;
    GlueReport report;
};

// h = f_1(c_1) on [c_1, 1], f_n on [a_n, b_n], f_n - z/n on [b_n, c_n],
// f_(n+1) + ramp_n on [c_(n+1), a_n] with ramp_n(c_(n+1)) = 0 and
// ramp_n(a_n) = (f_n - f_(n+1))(a_n), f on [0, c_(count+1)]. Members are
// read at enclosure midpoints, so h is exact for exact members. h is sampled
// on grid, all breakpoints and the breakpoints of z.
GlueResult glue_translation(const GlueSpec& spec, const std::vector<Rational>& grid, const Rational& eps);

}  // namespace roughlab
