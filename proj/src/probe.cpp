#include "roughlab/probe.hpp"

#include "roughlab/error.hpp"
#include "roughlab/transcendental.hpp"

namespace roughlab {

namespace {

Integer ipow(unsigned long b, unsigned long s) {
    Integer out;
    mpz_ui_pow_ui(out.get_mpz_t(), b, s);
    return out;
}

}  // namespace

Integer lemma_w(const Rational& x, unsigned long b, unsigned long s) {
    return ceil(Rational(x * ipow(b, s) - Rational(1, 2)));
}

WitnessReport lemma_witness(const WeierstrassParams& p, const Rational& x, const std::vector<unsigned long>& s,
                            const std::vector<int>& r, std::size_t m, const Rational& eps) {
    if (x == 0) fail(ErrorKind::precondition, "lemma witness needs x > 0");
    if (x < 0 || x > 1) fail(ErrorKind::domain, "lemma witness: x = " + to_string(x) + " outside (0, 1]");
    if (eps <= 0) fail(ErrorKind::argument, "lemma witness: tolerance must be positive");
    if (s.empty() || s.size() != r.size()) fail(ErrorKind::argument, "lemma witness: s and r must be non-empty and equally long");
    for (std::size_t j = 0; j < s.size(); ++j) {
        if (s[j] == 0 || (j > 0 && s[j] <= s[j - 1]))
            fail(ErrorKind::argument, "lemma witness: s must be increasing positive integers");
        if (r[j] != 1 && r[j] != -1) fail(ErrorKind::argument, "lemma witness: r entries must be +1 or -1");
    }
    if (m == 0 || m > s.size())
        fail(ErrorKind::argument, "lemma witness: m = " + std::to_string(m) + " outside 1.." + std::to_string(s.size()));

    WitnessReport rep;
    rep.x = x;
    rep.m = m;
    rep.s_m = s[m - 1];
    const Integer B = ipow(p.b, rep.s_m);
    const Integer w = lemma_w(x, p.b, rep.s_m);
    rep.w = w;
    rep.probe = make_rational(w - 1, B);
    if (rep.probe < 0)
        fail(ErrorKind::range, "lemma witness: y_m = " + to_string(rep.probe) + " < 0; use a larger m");

    const Rational gap = x - rep.probe;
    const Rational tol = eps * gap / (4 * static_cast<long>(s.size()));
    Enclosure sum = Enclosure::point(0);
    for (std::size_t j = 0; j < s.size(); ++j) {
        const Integer bj = ipow(p.b, s[j]);
        const Enclosure diff = cos_pi(Rational(rep.probe * bj), tol) - cos_pi(Rational(x * bj), tol);
        sum += diff * Rational(r[j] * pow(p.a, s[j]));
    }
    const Rational tail = 2 * pow(p.a, s.back() + 1) / (1 - p.a);
    rep.quotient = abs(sum.widened(tail)) / gap;
    rep.required_bound = p.margin * pow(Rational(p.a * p.b), rep.s_m);
    rep.verdict = from_tri(certainly_greater(rep.quotient, rep.required_bound));
    return rep;
}

std::optional<WitnessReport> lipschitz_witness(const FunctionHandle& f, const Rational& x, const Rational& M,
                                               const std::vector<Rational>& grid, const Rational& eps) {
    if (M <= 0) fail(ErrorKind::argument, "lipschitz witness: M must be positive");
    const Enclosure fx = f(x, eps);
    for (const auto& y : grid) {
        if (y == x) continue;
        const Enclosure q = abs(f(y, eps) - fx) / abs(Rational(y - x));
        if (q.lo() > M) {
            WitnessReport rep;
            rep.x = x;
            rep.probe = y;
            rep.quotient = q;
            rep.required_bound = Enclosure::point(M);
            rep.verdict = Verdict::certified;
            return rep;
        }
    }
    return std::nullopt;
}

LadderReport directional_scan_2d(const FunctionHandle2D& F, const Rational& px, const Rational& py,
                                 const Rational& vx, const Rational& vy, const std::vector<Rational>& ladder,
                                 const Rational& eps) {
    if (vx == 0 && vy == 0) fail(ErrorKind::argument, "directional scan: direction must be non-zero");
    for (std::size_t k = 0; k < ladder.size(); ++k)
        if (ladder[k] <= 0 || (k > 0 && ladder[k] >= ladder[k - 1]))
            fail(ErrorKind::argument, "directional scan: ladder must be positive and strictly decreasing");

    LadderReport rep;
    rep.function = F.name();
    rep.px = px;
    rep.py = py;
    rep.vx = vx;
    rep.vy = vy;
    const Rational tol = make_rational(1, Integer(1) << 64);
    const Enclosure norm = sqrt_enclosure(Rational(vx * vx + vy * vy), tol);
    rep.ux = Enclosure::point(vx) / norm;
    rep.uy = Enclosure::point(vy) / norm;

    const Enclosure f0 = F(px, py, eps);
    std::optional<Rational> prev_lo;
    int sign = 0;
    for (const auto& h : ladder) {
        LadderSample sample{h, false, std::nullopt};
        const Rational qx = px + h * vx, qy = py + h * vy;
        if (!F.in_domain(qx, qy)) {
            sample.skipped = true;
            rep.samples.push_back(std::move(sample));
            continue;
        }
        const Enclosure q = (F(qx, qy, eps) - f0) / (norm * h);
        sample.quotient = q;
        const Rational lo = abs(q).lo();
        rep.max_abs_lo = max(rep.max_abs_lo, lo);
        if (prev_lo && lo < *prev_lo) rep.abs_lo_nondecreasing = false;
        prev_lo = lo;
        const int s = q.lo() > 0 ? 1 : q.hi() < 0 ? -1 : 0;
        if (s == 0 || (sign != 0 && s != sign)) rep.sign_stable = false;
        if (s != 0) sign = s;
        rep.samples.push_back(std::move(sample));
    }
    return rep;
}

std::pair<Enclosure, Enclosure> radial_ratio_bounds(const Rational& a, const Rational& b, const Rational& alpha,
                                                    const Rational& beta, const Rational& tol) {
    if (!(0 < alpha && alpha < beta)) fail(ErrorKind::precondition, "radial ratio bounds need 0 < alpha < beta");
    const Rational k = a * a + 1;
    if (alpha * alpha * k <= b * b)
        fail(ErrorKind::precondition, "degenerate geometry: alpha^2 (a^2+1) = " + to_string(Rational(alpha * alpha * k)) +
                                          " <= b^2 = " + to_string(Rational(b * b)));
    const Enclosure root_k = sqrt_enclosure(k, tol);
    const Enclosure c = root_k * alpha / sqrt_enclosure(Rational(beta * beta * k - b * b), tol);
    const Enclosure d = root_k * beta / sqrt_enclosure(Rational(alpha * alpha * k - b * b), tol);
    return {c, d};
}

BanachReport banach_membership_scan(const FunctionHandle2D& f, const BanachScanSettings& st, const Rational& eps) {
    if (st.n == 0 || st.xy_resolution == 0 || st.v_resolution == 0 || st.h_samples == 0)
        fail(ErrorKind::argument, "banach scan: n and resolutions must be positive");
    if ((st.corner_i != 0 && st.corner_i != 1) || (st.corner_j != 0 && st.corner_j != 1))
        fail(ErrorKind::argument, "banach scan: corner entries must be 0 or 1");

    BanachReport rep;
    rep.settings = st;
    const unsigned n = st.n;
    const Rational margin(1, n + 1);
    auto axis = [&](int corner) {
        return corner == 0 ? uniform_grid(0, 1 - margin, st.xy_resolution) : uniform_grid(margin, 1, st.xy_resolution);
    };
    const auto xs = axis(st.corner_i), ys = axis(st.corner_j);

    std::vector<std::pair<Rational, Rational>> dirs;
    if (st.vertical) {
        dirs.emplace_back(0, 1);
    } else {
        // v1 = (1-t^2)/(1+t^2) >= 1/(n+1)  iff  t^2 <= n/(n+2)
        const long R = st.v_resolution;
        for (long k = -R; k <= R; ++k) {
            const Rational t = make_rational(k, R);
            if (t * t > make_rational(n, n + 2)) continue;
            dirs.emplace_back((1 - t * t) / (1 + t * t), 2 * t / (1 + t * t));
        }
    }
    rep.directions = dirs.size();
    for (unsigned k = st.h_samples; k >= 1; --k) rep.h.push_back(Rational(1, n) / Rational(Integer(1) << k));

    for (const auto& x : xs) {
        for (const auto& y : ys) {
            ++rep.points;
            const Enclosure f0 = f(x, y, eps);
            for (const auto& [vx, vy] : dirs) {
                bool inside = false, ok = true;
                for (const auto& h : rep.h) {
                    const Rational qx = x + h * vx, qy = y + h * vy;
                    if (!f.in_domain(qx, qy)) continue;
                    inside = true;
                    if (certainly_less(abs(f(qx, qy, eps) - f0), Rational(n * h)) != Tri::yes) {
                        ok = false;
                        break;
                    }
                }
                if (ok && inside) {
                    rep.candidate = BanachCandidate{x, y, vx, vy};
                    return rep;
                }
            }
        }
    }
    return rep;
}

}  // namespace roughlab
