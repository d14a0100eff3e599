#include "chab/metric.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <stdexcept>

namespace chab {

namespace {

// log(cosh(x)) without overflow
double log_cosh(double x) {
    const double ax = std::abs(x);
    return ax + std::log1p(std::exp(-2.0 * ax)) - std::numbers::ln2_v<double>;
}

}  // namespace

double dist_line(const CompactPoint& a, const CompactPoint& b) {
    if (a.infinite && b.infinite) return 0.0;
    if (a.infinite) return 2.0 / std::hypot(1.0, b.x);
    if (b.infinite) return 2.0 / std::hypot(1.0, a.x);
    return 2.0 * std::abs(a.x - b.x) / (std::hypot(1.0, a.x) * std::hypot(1.0, b.x));
}

double chordal_exp(double a, double alpha, double b, double beta) {
    const double u = 0.5 * (a - b);
    const double v = 0.5 * (alpha - beta);
    if (std::abs(a) <= 120.0 && std::abs(b) <= 120.0) {
        const double sh = std::sinh(u);
        const double sn = std::sin(v);
        return 2.0 * std::sqrt(sh * sh + sn * sn) /
               std::sqrt(std::cosh(a) * std::cosh(b));
    }
    // log-domain: sinh^2(u) dominates sin^2(v) once |u| is large
    const double au = std::abs(u);
    double log_num2;  // log(sinh^2 u + sin^2 v)
    if (au > 60.0) {
        const double log_sinh = au + std::log1p(-std::exp(-2.0 * au)) - std::numbers::ln2_v<double>;
        log_num2 = 2.0 * log_sinh;
    } else {
        const double sh = std::sinh(u);
        const double sn = std::sin(v);
        const double n2 = sh * sh + sn * sn;
        if (n2 == 0.0) return 0.0;
        log_num2 = std::log(n2);
    }
    const double lg = std::numbers::ln2_v<double> +
                      0.5 * (log_num2 - log_cosh(a) - log_cosh(b));
    return std::exp(lg);
}

double chordal_to_zero(double a) {
    // 2 e^a / sqrt(1 + e^{2a})
    if (a <= 0.0) {
        const double e = std::exp(a);
        return 2.0 * e / std::sqrt(1.0 + e * e);
    }
    const double e = std::exp(-a);
    return 2.0 / std::sqrt(1.0 + e * e);
}

double chordal_to_sphere_infinity(double a) { return chordal_to_zero(-a); }

double dist_cylinder(const CompactPoint& a, const CompactPoint& b) {
    if (a.infinite && b.infinite) return 0.0;
    if (a.infinite) return std::min(chordal_to_zero(b.x), chordal_to_sphere_infinity(b.x));
    if (b.infinite) return std::min(chordal_to_zero(a.x), chordal_to_sphere_infinity(a.x));
    const double direct = chordal_exp(a.x, a.theta, b.x, b.theta);
    const double glue1 = chordal_to_zero(a.x) + chordal_to_sphere_infinity(b.x);
    const double glue2 = chordal_to_sphere_infinity(a.x) + chordal_to_zero(b.x);
    return std::min(direct, std::min(glue1, glue2));
}

double dist(SpaceKind space, const CompactPoint& a, const CompactPoint& b) {
    return space == SpaceKind::LineBar ? dist_line(a, b) : dist_cylinder(a, b);
}

double line_angle(const CompactPoint& p) {
    if (p.infinite) return std::numbers::pi_v<double>;
    return 2.0 * std::atan(p.x);
}

std::array<double, 3> cylinder_embedding(double x, double theta) {
    const double sech = 1.0 / std::cosh(std::min(std::abs(x), 710.0));
    return {std::cos(theta) * sech, std::sin(theta) * sech, std::tanh(x)};
}

namespace {

// Whether two representations name the same quotient point closely
// enough that a tiny distance between them is legitimate. Points deep in
// the crushed region near infinity compare equal to the glued point.
bool same_quotient_point(SpaceKind space, const CompactPoint& a,
                         const CompactPoint& b, double tol) {
    if (a.infinite && b.infinite) return true;
    const CompactPoint inf = CompactPoint::infinity();
    if (dist(space, a, inf) <= 2.0 * tol && dist(space, b, inf) <= 2.0 * tol) return true;
    if (a.infinite || b.infinite) return false;
    if (space == SpaceKind::LineBar) return std::abs(a.x - b.x) <= 1e-6;
    const double dth = std::abs(a.theta - b.theta);
    return std::abs(a.x - b.x) <= 1e-6 && std::min(dth, kTwoPi - dth) <= 1e-6;
}

}  // namespace

MetricAxiomReport check_metric_axioms(SpaceKind space,
                                      const std::vector<CompactPoint>& pts,
                                      double tol) {
    if (pts.size() < 3)
        throw std::invalid_argument("check_metric_axioms: need at least 3 points");

    MetricAxiomReport rep;
    rep.point_count = pts.size();
    const std::size_t n = pts.size();

    std::vector<double> d(n * n, 0.0);
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) {
            d[i * n + j] = dist(space, pts[i], pts[j]);
        }
    }

    for (std::size_t i = 0; i < n; ++i) {
        if (d[i * n + i] > tol) ++rep.identity_violations;
        for (std::size_t j = i + 1; j < n; ++j) {
            ++rep.pair_count;
            const double dij = d[i * n + j];
            if (dij < 0.0) ++rep.negativity_violations;
            if (std::abs(dij - d[j * n + i]) > tol) ++rep.symmetry_violations;
            if (dij <= tol && !same_quotient_point(space, pts[i], pts[j], tol))
                ++rep.identity_violations;
        }
    }

    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = i + 1; j < n; ++j) {
            const double dij = d[i * n + j];
            for (std::size_t k = j + 1; k < n; ++k) {
                ++rep.triple_count;
                const double dik = d[i * n + k];
                const double djk = d[j * n + k];
                // all three sides of each triangle
                const double defect = std::max({dij - dik - djk,
                                                dik - dij - djk,
                                                djk - dij - dik});
                rep.max_triangle_defect = std::max(rep.max_triangle_defect, defect);
                if (defect > tol) ++rep.triangle_violations;
            }
        }
    }
    return rep;
}

}  // namespace chab
