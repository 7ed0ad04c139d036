#include "roughlab/strip.hpp"

#include "roughlab/cantor.hpp"
#include "roughlab/error.hpp"

#include <algorithm>
#include <memory>

namespace roughlab {

bool StripReport::passed() const {
    return std::all_of(reproduction.begin(), reproduction.end(), [](const auto& r) { return r.equal; }) &&
           std::all_of(midpoints.begin(), midpoints.end(), [](const auto& r) { return r.equal; });
}

StripExtension tietze_strip_extension(const std::map<Rational, FunctionHandle2D>& family, unsigned N,
                                      const std::vector<Rational>& y_grid, const Rational& eps) {
    std::vector<Rational> points = level_points(N + 1).D;
    if (family.size() != points.size())
        fail(ErrorKind::argument, "strip family needs " + std::to_string(points.size()) + " members, got " +
                                      std::to_string(family.size()));
    for (const auto& c : points)
        if (!family.count(c)) fail(ErrorKind::argument, "strip family has no member at c = " + to_string(c));

    auto members = std::make_shared<const std::map<Rational, FunctionHandle2D>>(family);
    auto nodes = std::make_shared<const std::vector<Rational>>(points);
    FunctionHandle2D F("strip extension", {0, 1}, {0, 1},
                       [members, nodes](const Rational& x, const Rational& y, const Rational& e) -> Enclosure {
                           auto hit = members->find(x);
                           if (hit != members->end()) return hit->second(x, y, e);
                           const auto it = std::upper_bound(nodes->begin(), nodes->end(), x);
                           const Rational& beta = *it;
                           const Rational& alpha = *(it - 1);
                           const Rational w = (x - alpha) / (beta - alpha);
                           return members->at(alpha)(alpha, y, e) * Rational(1 - w) + members->at(beta)(beta, y, e) * w;
                       });

    StripExtension out{F, points, {}};
    for (const auto& c : points) {
        for (const auto& y : y_grid) {
            const Enclosure fam = family.at(c)(c, y, eps);
            const Enclosure ext = F(c, y, eps);
            out.report.reproduction.push_back({c, y, fam, ext, fam == ext});
        }
    }
    for (std::size_t k = 0; k + 1 < points.size(); ++k) {
        const Rational &alpha = points[k], &beta = points[k + 1];
        for (const auto& y : y_grid) {
            const Enclosure mid = F((alpha + beta) / 2, y, eps);
            const Enclosure avg = (F(alpha, y, eps) + F(beta, y, eps)) * Rational(1, 2);
            out.report.midpoints.push_back({alpha, beta, y, mid, avg, mid == avg});
        }
    }
    return out;
}

}  // namespace roughlab
