#include "roughlab/sandwich.hpp"

#include "roughlab/error.hpp"

#include <algorithm>

namespace roughlab {

namespace {

void check_grid(const std::vector<Rational>& grid) {
    if (grid.size() < 2 || grid.front() != 0 || grid.back() != 1)
        fail(ErrorKind::argument, "sandwich grid must run from 0 to 1");
    for (std::size_t i = 1; i < grid.size(); ++i)
        if (!(grid[i - 1] < grid[i])) fail(ErrorKind::argument, "sandwich grid must be strictly increasing");
}

Rational sq(const Rational& q) { return q * q; }

}  // namespace

std::size_t SandwichCertificate::failed() const {
    return static_cast<std::size_t>(
        std::count_if(records.begin(), records.end(), [](const auto& r) { return r.verdict == Verdict::failed; }));
}

std::size_t SandwichCertificate::undecided() const {
    return static_cast<std::size_t>(
        std::count_if(records.begin(), records.end(), [](const auto& r) { return r.verdict == Verdict::undecided; }));
}

bool same_document(const SandwichCertificate& a, const SandwichCertificate& b) {
    return a.depth == b.depth && a.grid == b.grid && a.g == b.g && a.records == b.records;
}

std::vector<SandwichRecord> sandwich_records(const AdmissibleFamily& fam, unsigned n, const std::vector<Rational>& grid,
                                             const std::vector<Rational>& g_values, const Rational& eps) {
    std::vector<SandwichRecord> out;
    for (const Rational& d : level_points(n).D) {
        const Interval u = neighborhood(d);
        const FunctionHandle& f = fam.member(d);
        for (std::size_t i = 0; i < grid.size(); ++i) {
            if (!u.contains(grid[i])) continue;
            SandwichRecord r;
            r.d = d;
            r.x = grid[i];
            r.deviation = abs(f(grid[i], eps) - g_values[i]);
            r.bound = sq(grid[i] - d);
            r.verdict = from_tri(certainly_le(r.deviation, r.bound));
            out.push_back(std::move(r));
        }
    }
    return out;
}

SandwichCertificate build_g(const AdmissibleFamily& fam, const std::vector<Rational>& grid, const Rational& eps) {
    check_grid(grid);
    const std::size_t G = grid.size();

    std::vector<std::vector<Enclosure>> table;
    for (const auto& f : fam.members) {
        std::vector<Enclosure> row;
        for (const auto& x : grid) row.push_back(f(x, eps));
        table.push_back(std::move(row));
    }
    auto row_of = [&](const Rational& d) -> const std::vector<Enclosure>& {
        const auto it = std::lower_bound(fam.points.begin(), fam.points.end(), d);
        return table[static_cast<std::size_t>(it - fam.points.begin())];
    };

    SandwichCertificate cert;
    cert.depth = fam.depth;
    cert.grid = grid;
    std::vector<Rational> S(G, Rational(0));

    for (unsigned n = 1; n <= fam.depth; ++n) {
        const LevelSets level = level_points(n);
        std::vector<Interval> eu;
        for (const auto& d : level.E) eu.push_back(neighborhood(d, n));

        // tilde g_n on the E_n neighbourhoods
        std::vector<std::optional<Rational>> step(G);
        for (std::size_t i = 0; i < G; ++i) {
            const Rational& x = grid[i];
            std::vector<std::size_t> cover;
            for (std::size_t k = 0; k < eu.size(); ++k)
                if (eu[k].contains(x)) cover.push_back(k);
            if (cover.empty()) continue;
            auto target = [&](std::size_t k) { return Rational(row_of(level.E[k])[i].midpoint() - S[i]); };
            if (cover.size() == 1) {
                step[i] = target(cover[0]);
            } else if (cover.size() == 2) {
                const Interval common{eu[cover[1]].lo, eu[cover[0]].hi};
                const Rational w = common.length() == 0 ? Rational(1, 2) : Rational((x - common.lo) / common.length());
                step[i] = (1 - w) * target(cover[0]) + w * target(cover[1]);
            } else {
                Rational sum = 0;
                for (auto k : cover) sum += target(k);
                step[i] = sum / static_cast<long>(cover.size());
            }
        }

        // interpolate across points no E_n neighbourhood reaches
        std::vector<std::size_t> known;
        for (std::size_t i = 0; i < G; ++i)
            if (step[i]) known.push_back(i);
        std::vector<Rational> g_n(G);
        for (std::size_t i = 0, k = 0; i < G; ++i) {
            while (k < known.size() && known[k] < i) ++k;
            if (step[i]) {
                g_n[i] = *step[i];
            } else if (k == 0) {
                g_n[i] = *step[known.front()];
            } else if (k == known.size()) {
                g_n[i] = *step[known.back()];
            } else {
                const std::size_t a = known[k - 1], b = known[k];
                const Rational w = (grid[i] - grid[a]) / (grid[b] - grid[a]);
                g_n[i] = (1 - w) * *step[a] + w * *step[b];
            }
        }

        // clamp into the D_n envelope
        for (std::size_t i = 0; i < G; ++i) {
            const Rational& x = grid[i];
            std::optional<Rational> lo, hi, lo_mid, hi_mid;
            Rational lo_d, hi_d;
            for (const auto& d : level.D) {
                if (!neighborhood(d).contains(x)) continue;
                const Enclosure& f = row_of(d)[i];
                const Rational r = sq(x - d);
                const Rational l = f.hi() - S[i] - r, h = f.lo() - S[i] + r;
                if (!lo || l > *lo) {
                    lo = l;
                    lo_d = d;
                }
                if (!hi || h < *hi) {
                    hi = h;
                    hi_d = d;
                }
                const Rational lm = f.midpoint() - S[i] - r, hm = f.midpoint() - S[i] + r;
                if (!lo_mid || lm > *lo_mid) lo_mid = lm;
                if (!hi_mid || hm < *hi_mid) hi_mid = hm;
            }
            if (!lo) continue;
            if (*lo_mid > *hi_mid)
                fail(ErrorKind::construction, "level " + std::to_string(n) + ": empty envelope at x = " + to_string(x) +
                                                  " between d = " + to_string(lo_d) + " and d = " + to_string(hi_d));
            if (*lo > *hi)
                fail(ErrorKind::undecided, "level " + std::to_string(n) + ": envelope at x = " + to_string(x) +
                                               " closed by enclosure width; tighten eps");
            g_n[i] = std::clamp(g_n[i], *lo, *hi);
        }

        for (std::size_t i = 0; i < G; ++i) S[i] += g_n[i];
        cert.partial_sums.emplace_back(grid, S);
    }

    cert.g = PiecewiseLinear(grid, S);
    cert.records = sandwich_records(fam, fam.depth, grid, S, eps);
    return cert;
}

}  // namespace roughlab
