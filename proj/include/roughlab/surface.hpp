#pragma once

#include "roughlab/function_handle.hpp"
#include "roughlab/verdict.hpp"

#include <random>
#include <vector>

namespace roughlab {

// Continuous piecewise-linear surface on a rectangular node grid. Each cell
// [x_i, x_(i+1)] x [y_j, y_(j+1)] is cut along its rising diagonal into a
// lower and an upper triangle.
class PlSurface {
public:
    // values[i][j] is the value at (xs[i], ys[j]).
    PlSurface(std::vector<Rational> xs, std::vector<Rational> ys, std::vector<std::vector<Rational>> values);

    // c + gx * x + gy * y on [0, 1]^2.
    static PlSurface plane(const Rational& c, const Rational& gx, const Rational& gy);
    // cells x cells uniform nodes with values drawn so every piece has
    // gradient norm below 10.
    static PlSurface random(std::mt19937_64& rng, unsigned cells);

    struct Piece {
        std::size_t i = 0, j = 0;
        bool upper = false;
        Rational gx, gy;
    };

    const std::vector<Rational>& xs() const { return xs_; }
    const std::vector<Rational>& ys() const { return ys_; }
    const std::vector<std::vector<Rational>>& values() const { return values_; }
    const std::vector<Piece>& pieces() const { return pieces_; }

    // Throws Error(domain) outside the node box.
    Rational operator()(const Rational& x, const Rational& y) const;
    // max over pieces of gx^2 + gy^2.
    Rational max_gradient_squared() const;
    FunctionHandle2D handle(std::string name = "pl surface") const;

private:
    std::vector<Rational> xs_, ys_;
    std::vector<std::vector<Rational>> values_;
    std::vector<Piece> pieces_;
};

struct PieceSlope {
    PlSurface::Piece piece;
    // (eps/2) m v1 - (|gx| v1 + |gy| |v2|) - n at v1 = 1/(n+1)
    Enclosure margin;
    Verdict verdict = Verdict::undecided;
};

struct EscapeReport {
    Rational eps;
    unsigned n = 0;
    unsigned long m = 0;
    Enclosure max_gradient;   // M
    bool minimal = false;     // m - 1 fails the defining inequality
    Rational distance;        // ||f - g|| = eps/4
    bool distance_ok = false; // distance <= eps/2
    Rational v1;
    Enclosure v2;
    std::vector<PieceSlope> slopes;

    bool certified() const;
};

struct EscapeResult {
    FunctionHandle2D f;
    EscapeReport report;
};

// f = g + (eps/2) dist(m x, Z) with m the least positive integer such that
// (eps/2) m / (n+1) > M + n, M the largest gradient norm of g. Every piece of
// g is then checked at the extremal direction v1 = 1/(n+1).
// Throws Error(precondition) for eps <= 0 or n = 0.
EscapeResult escape_perturbation(const PlSurface& g, const Rational& eps, unsigned n);

}  // namespace roughlab
