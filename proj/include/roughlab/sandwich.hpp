#pragma once

#include "roughlab/family.hpp"

#include <vector>

namespace roughlab {

// |f_d(x) - g(x)| <= (x - d)^2 at one grid point x of U_d.
struct SandwichRecord {
    Rational d;
    Rational x;
    Enclosure deviation;
    Rational bound;
    Verdict verdict = Verdict::undecided;

    friend bool operator==(const SandwichRecord&, const SandwichRecord&) = default;
};

// Evidence at grid points only; says nothing between them.
struct SandwichCertificate {
    unsigned depth = 0;
    std::vector<Rational> grid;
    PiecewiseLinear g = PiecewiseLinear::constant(0);
    std::vector<SandwichRecord> records;
    // g_1 + ... + g_n for n = 1..depth; not part of the exported document.
    std::vector<PiecewiseLinear> partial_sums;

    std::size_t failed() const;
    std::size_t undecided() const;
    bool valid() const { return failed() == 0 && undecided() == 0; }
};

bool same_document(const SandwichCertificate& a, const SandwichCertificate& b);

// Records for every d in D_n and every grid x in U_d against the given
// values of g on the grid.
std::vector<SandwichRecord> sandwich_records(const AdmissibleFamily& fam, unsigned n, const std::vector<Rational>& grid,
                                             const std::vector<Rational>& g_values, const Rational& eps);

// Builds g = g_1 + ... + g_N on the grid, level by level. Level n follows
// f_d - S_(n-1) on the part of U_d (d in E_n) not shared with another E_n
// neighbourhood, ramps linearly across shared parts, interpolates where no
// E_n neighbourhood reaches and finally clamps into
// [max (f_d - S_(n-1) - (x-d)^2), min (f_d - S_(n-1) + (x-d)^2)] over
// d in D_n with x in U_d.
// Throws Error(construction) naming x and the two binding points when the
// envelope is empty, Error(undecided) when only enclosure width empties it.
SandwichCertificate build_g(const AdmissibleFamily& fam, const std::vector<Rational>& grid, const Rational& eps);

}  // namespace roughlab
