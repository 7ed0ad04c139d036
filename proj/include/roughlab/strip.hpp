#pragma once

#include "roughlab/function_handle.hpp"

#include <map>
#include <vector>

namespace roughlab {

struct ReproductionCheck {
    Rational c, y;
    Enclosure family_value;
    Enclosure extension_value;
    bool equal = false;
};

struct GapMidpointCheck {
    Rational alpha, beta, y;
    Enclosure midpoint_value;
    Enclosure average;
    bool equal = false;
};

struct StripReport {
    std::vector<ReproductionCheck> reproduction;
    std::vector<GapMidpointCheck> midpoints;
    bool passed() const;
};

struct StripExtension {
    FunctionHandle2D F;
    std::vector<Rational> represented;  // D_(N+1): every endpoint of a level-N interval
    StripReport report;
};

// F(c, y) = phi_c(c, y) at represented points c and linear in x between
// consecutive represented points. The family must hold exactly the points of
// D_(N+1) (Error(argument) otherwise); the report is taken over y_grid and
// every gap (alpha, beta) between consecutive represented points.
StripExtension tietze_strip_extension(const std::map<Rational, FunctionHandle2D>& family, unsigned N,
                                      const std::vector<Rational>& y_grid, const Rational& eps);

}  // namespace roughlab
