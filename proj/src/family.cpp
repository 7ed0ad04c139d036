#include "roughlab/family.hpp"

#include "roughlab/error.hpp"

#include <algorithm>

namespace roughlab {

namespace {

using Table = std::vector<std::vector<Enclosure>>;

Table tabulate(const std::vector<FunctionHandle>& members, const std::vector<Rational>& grid, const Rational& eps) {
    Table t;
    t.reserve(members.size());
    for (const auto& f : members) {
        std::vector<Enclosure> row;
        row.reserve(grid.size());
        for (const auto& x : grid) row.push_back(f(x, eps));
        t.push_back(std::move(row));
    }
    return t;
}

Enclosure grid_norm(const std::vector<Enclosure>& a, const std::vector<Enclosure>& b) {
    Rational lo = 0, hi = 0;
    for (std::size_t k = 0; k < a.size(); ++k) {
        const Enclosure diff = abs(a[k] - b[k]);
        lo = max(lo, diff.lo());
        hi = max(hi, diff.hi());
    }
    return Enclosure(lo, hi);
}

Tri compare(const Enclosure& norm, const Rational& bound, bool strict) {
    return strict ? certainly_less(norm, bound) : certainly_le(norm, bound);
}

std::string pair_name(const Rational& d, const Rational& d2) { return "(" + to_string(d) + ", " + to_string(d2) + ")"; }

// The records of check_family_conditions without norms filled in.
std::vector<ConditionRecord> condition_skeleton(const std::vector<Rational>& points, const std::vector<Rational>& grid,
                                                std::vector<std::pair<std::size_t, std::size_t>>& index) {
    std::vector<ConditionRecord> out;
    for (std::size_t i = 0; i < points.size(); ++i) {
        for (std::size_t j = i + 1; j < points.size(); ++j) {
            const Rational& d = points[i];
            const Rational& d2 = points[j];
            auto add = [&](int cond, Rational bound, bool strict) {
                ConditionRecord r;
                r.condition = cond;
                r.d = d;
                r.d2 = d2;
                r.bound = std::move(bound);
                r.strict = strict;
                out.push_back(std::move(r));
                index.emplace_back(i, j);
            };
            add(1, Rational((d - d2) * (d - d2)), false);

            const unsigned n1 = level_of(d), n2 = level_of(d2);
            const Interval u1 = neighborhood(d, n1), u2 = neighborhood(d2, n2);
            const auto common = overlap(u1, u2);
            if (!common) continue;
            const auto inside = std::count_if(grid.begin(), grid.end(), [&](const Rational& x) { return common->contains(x); });
            if (inside < 2)
                fail(ErrorKind::precondition, "grid has " + std::to_string(inside) + " point(s) in U_d ∩ U_d' for " +
                                                  pair_name(d, d2) + "; refine the grid");
            add(2, overlap_infimum(d, d2, *common), true);
            if (n1 == n2) {
                const Rational r = distance(d, u2);
                add(3, Rational(r * r / 5), true);
            } else {
                // the point on the lower level measured against the other's neighbourhood
                const Rational r = n1 < n2 ? distance(d, u2) : distance(d2, u1);
                add(4, Rational(r * r / 5), true);
            }
        }
    }
    return out;
}

}  // namespace

const FunctionHandle& AdmissibleFamily::member(const Rational& d) const {
    const auto it = std::lower_bound(points.begin(), points.end(), d);
    if (it == points.end() || *it != d) fail(ErrorKind::argument, "family has no member at d = " + to_string(d));
    return members[static_cast<std::size_t>(it - points.begin())];
}

Rational psi(const Rational& theta, const Rational& d) {
    const CantorPoint c = CantorPoint::from_rational(d);
    const Rational ninth(1, 9);
    Rational v = 0;
    Rational scale = 1;
    for (auto digit : c.prefix()) {
        scale *= ninth;
        if (digit == 2) v += scale;
    }
    if (!c.repeat().empty()) {
        Rational block = 0;
        Rational s = 1;
        for (auto digit : c.repeat()) {
            s *= ninth;
            if (digit == 2) block += s;
        }
        v += scale * block / (1 - s);
    }
    return theta * v;
}

AdmissibleFamily make_admissible_family(const FunctionHandle& base, unsigned depth, const Rational& theta) {
    if (theta < 0) fail(ErrorKind::precondition, "family scale theta must be >= 0");
    AdmissibleFamily fam = make_family(depth, [&](const Rational& d) {
        return base.plus(psi(theta, d), "f_" + to_string(d));
    });
    fam.scale = theta;
    fam.base = base;
    return fam;
}

AdmissibleFamily make_family(unsigned depth, const std::function<FunctionHandle(const Rational&)>& member) {
    AdmissibleFamily fam;
    fam.depth = depth;
    fam.points = level_points(depth).D;
    for (const auto& d : fam.points) {
        FunctionHandle f = member(d);
        if (!(f.domain() == Interval{0, 1})) fail(ErrorKind::argument, "family member " + f.name() + " is not on [0, 1]");
        fam.members.push_back(std::move(f));
    }
    return fam;
}

Rational overlap_infimum(const Rational& d, const Rational& d2, const Interval& common) {
    const Rational x = std::clamp(Rational((d + d2) / 2), common.lo, common.hi);
    return (d - x) * (d - x) + (d2 - x) * (d2 - x);
}

Rational distance(const Rational& x, const Interval& u) {
    if (x < u.lo) return u.lo - x;
    if (x > u.hi) return x - u.hi;
    return 0;
}

std::optional<Interval> overlap(const Interval& u, const Interval& v) {
    Interval w{max(u.lo, v.lo), min(u.hi, v.hi)};
    if (w.hi < w.lo) return std::nullopt;
    return w;
}

FamilyReport check_family_conditions(const AdmissibleFamily& fam, const std::vector<Rational>& grid,
                                     const Rational& eps) {
    if (grid.empty()) fail(ErrorKind::argument, "family conditions need a non-empty grid");
    FamilyReport report;
    report.depth = fam.depth;
    std::vector<std::pair<std::size_t, std::size_t>> index;
    report.records = condition_skeleton(fam.points, grid, index);

    const Table table = tabulate(fam.members, grid, eps);
    for (std::size_t r = 0; r < report.records.size(); ++r) {
        ConditionRecord& rec = report.records[r];
        rec.norm = grid_norm(table[index[r].first], table[index[r].second]);
        rec.verdict = from_tri(compare(rec.norm, rec.bound, rec.strict));
        if (rec.verdict == Verdict::undecided)
            fail(ErrorKind::undecided, "condition " + std::to_string(rec.condition) + " undecided for pair " +
                                           pair_name(rec.d, rec.d2) + " at eps = " + to_string(eps) +
                                           "; tighten eps");
        if (rec.verdict == Verdict::failed) ++report.failed;
    }

    if (fam.scale && fam.base) {
        // norms scale linearly with theta: measure once at theta = 1
        const AdmissibleFamily unit = make_admissible_family(*fam.base, fam.depth, 1);
        const Table t1 = tabulate(unit.members, grid, eps);
        std::vector<Enclosure> n1;
        for (const auto& [i, j] : index) n1.push_back(grid_norm(t1[i], t1[j]));
        auto passes = [&](const Rational& theta) {
            for (std::size_t r = 0; r < n1.size(); ++r) {
                const Enclosure scaled = n1[r] * theta;
                if (compare(scaled, report.records[r].bound, report.records[r].strict) != Tri::yes) return false;
            }
            return true;
        };
        Rational lo = 0, hi = 1;
        if (passes(hi)) {
            lo = hi;
        } else {
            for (int it = 0; it < 40; ++it) {
                const Rational mid = (lo + hi) / 2;
                (passes(mid) ? lo : hi) = mid;
            }
        }
        report.theta_star = lo;
    }
    return report;
}

std::vector<Rational> triadic_grid(unsigned level) {
    Integer den;
    mpz_ui_pow_ui(den.get_mpz_t(), 3, level);
    std::vector<Rational> out;
    for (Integer k = 0; k <= den; ++k) out.push_back(make_rational(k, den));
    return out;
}

}  // namespace roughlab
