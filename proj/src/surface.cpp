#include "roughlab/surface.hpp"

#include "roughlab/error.hpp"
#include "roughlab/transcendental.hpp"

#include <algorithm>

namespace roughlab {

namespace {

std::size_t cell_of(const std::vector<Rational>& nodes, const Rational& x) {
    auto it = std::upper_bound(nodes.begin(), nodes.end(), x);
    std::size_t k = static_cast<std::size_t>(it - nodes.begin());
    if (k == nodes.size()) --k;
    return k - 1;
}

void check_nodes(const std::vector<Rational>& nodes, const char* axis) {
    if (nodes.size() < 2) fail(ErrorKind::argument, std::string("surface needs two nodes along ") + axis);
    for (std::size_t i = 1; i < nodes.size(); ++i)
        if (!(nodes[i - 1] < nodes[i]))
            fail(ErrorKind::argument, std::string("surface nodes along ") + axis + " must increase");
}

}  // namespace

PlSurface::PlSurface(std::vector<Rational> xs, std::vector<Rational> ys, std::vector<std::vector<Rational>> values)
    : xs_(std::move(xs)), ys_(std::move(ys)), values_(std::move(values)) {
    check_nodes(xs_, "x");
    check_nodes(ys_, "y");
    if (values_.size() != xs_.size()) fail(ErrorKind::argument, "surface values do not match the x nodes");
    for (const auto& col : values_)
        if (col.size() != ys_.size()) fail(ErrorKind::argument, "surface values do not match the y nodes");

    for (std::size_t i = 0; i + 1 < xs_.size(); ++i) {
        const Rational hx = xs_[i + 1] - xs_[i];
        for (std::size_t j = 0; j + 1 < ys_.size(); ++j) {
            const Rational hy = ys_[j + 1] - ys_[j];
            const auto& z = values_;
            pieces_.push_back({i, j, false, (z[i + 1][j] - z[i][j]) / hx, (z[i + 1][j + 1] - z[i + 1][j]) / hy});
            pieces_.push_back({i, j, true, (z[i + 1][j + 1] - z[i][j + 1]) / hx, (z[i][j + 1] - z[i][j]) / hy});
        }
    }
}

PlSurface PlSurface::plane(const Rational& c, const Rational& gx, const Rational& gy) {
    return PlSurface({0, 1}, {0, 1}, {{c, c + gy}, {c + gx, c + gx + gy}});
}

PlSurface PlSurface::random(std::mt19937_64& rng, unsigned cells) {
    if (cells == 0) fail(ErrorKind::argument, "random surface needs at least one cell");
    // neighbouring nodes differ by at most 6/cells, so each gradient
    // component is at most 6 and the norm at most 6 sqrt(2) < 10
    std::uniform_int_distribution<long> pick(-3000, 3000);
    std::uniform_int_distribution<long> offset(-5000, 5000);
    const Rational base = make_rational(offset(rng), 1000);
    std::vector<std::vector<Rational>> values(cells + 1, std::vector<Rational>(cells + 1));
    for (auto& col : values)
        for (auto& v : col) v = base + make_rational(pick(rng), 1000l * cells);
    const auto grid = uniform_grid(0, 1, cells);
    return PlSurface(grid, grid, std::move(values));
}

Rational PlSurface::operator()(const Rational& x, const Rational& y) const {
    if (x < xs_.front() || x > xs_.back() || y < ys_.front() || y > ys_.back())
        fail(ErrorKind::domain, "surface: (" + to_string(x) + ", " + to_string(y) + ") outside the node box");
    const std::size_t i = cell_of(xs_, x), j = cell_of(ys_, y);
    const Rational u = (x - xs_[i]) / (xs_[i + 1] - xs_[i]);
    const Rational v = (y - ys_[j]) / (ys_[j + 1] - ys_[j]);
    const Piece& p = pieces_[2 * (i * (ys_.size() - 1) + j) + (v > u ? 1 : 0)];
    return values_[i][j] + p.gx * (x - xs_[i]) + p.gy * (y - ys_[j]);
}

Rational PlSurface::max_gradient_squared() const {
    Rational best = 0;
    for (const auto& p : pieces_) best = max(best, Rational(p.gx * p.gx + p.gy * p.gy));
    return best;
}

FunctionHandle2D PlSurface::handle(std::string name) const {
    PlSurface copy = *this;
    return FunctionHandle2D(std::move(name), {xs_.front(), xs_.back()}, {ys_.front(), ys_.back()},
                            [copy](const Rational& x, const Rational& y, const Rational&) {
                                return Enclosure::point(copy(x, y));
                            });
}

bool EscapeReport::certified() const {
    return minimal && distance_ok &&
           std::all_of(slopes.begin(), slopes.end(), [](const auto& s) { return s.verdict == Verdict::certified; });
}

EscapeResult escape_perturbation(const PlSurface& g, const Rational& eps, unsigned n) {
    if (eps <= 0) fail(ErrorKind::precondition, "escape perturbation needs eps > 0");
    if (n == 0) fail(ErrorKind::precondition, "escape perturbation needs n >= 1");

    const Rational M2 = g.max_gradient_squared();
    const Rational half = eps / 2;
    // (eps/2) m/(n+1) - n > M, compared through squares
    auto holds = [&](unsigned long m) {
        const Rational q = half * m / (n + 1) - n;
        return q > 0 && q * q > M2;
    };

    EscapeReport rep;
    rep.eps = eps;
    rep.n = n;
    rep.max_gradient = sqrt_enclosure(M2, Rational(1, 1l << 40));
    const Rational start = floor(Rational((rep.max_gradient.lo() + n) * (n + 1) / half));
    unsigned long m = std::max<long>(1, start.get_num().get_si() - 1);
    while (m > 1 && holds(m - 1)) --m;
    while (!holds(m)) ++m;
    rep.m = m;
    rep.minimal = m == 1 || !holds(m - 1);
    rep.distance = eps / 4;
    rep.distance_ok = rep.distance <= half;

    rep.v1 = Rational(1, n + 1);
    Rational tol(1, 1l << 30);
    for (int attempt = 0; attempt < 8; ++attempt, tol /= 1l << 20) {
        rep.v2 = sqrt_enclosure(Rational(1 - rep.v1 * rep.v1), tol);
        rep.slopes.clear();
        bool undecided = false;
        for (const auto& p : g.pieces()) {
            PieceSlope s{p, {}, Verdict::undecided};
            s.margin = Enclosure::point(half * m * rep.v1 - abs(p.gx) * rep.v1 - n) - rep.v2 * abs(p.gy);
            s.verdict = from_tri(certainly_greater(s.margin, Rational(0)));
            undecided = undecided || s.verdict == Verdict::undecided;
            rep.slopes.push_back(std::move(s));
        }
        if (!undecided) break;
    }

    const PlSurface gc = g;
    FunctionHandle2D f("escape perturbation", {g.xs().front(), g.xs().back()}, {g.ys().front(), g.ys().back()},
                       [gc, half, m](const Rational& x, const Rational& y, const Rational&) {
                           return Enclosure::point(gc(x, y) + half * dist_to_Z(Rational(x * m)));
                       });
    return {std::move(f), std::move(rep)};
}

}  // namespace roughlab
