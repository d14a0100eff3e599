#pragma once

#include <array>
#include <cstddef>
#include <vector>

#include "chab/compact_point.hpp"

namespace chab {

/// Metric on the one-point compactification of the line, realized as the
/// chord length between stereographic images on the unit circle:
///
///   d(x, y)   = 2|x - y| / sqrt((1 + x^2)(1 + y^2))
///   d(x, inf) = 2 / sqrt(1 + x^2)
///
/// Bounded by 2; neighborhoods of infinity are exactly the complements
/// of compact sets, which is what makes truncated samples certifiable.
double dist_line(const CompactPoint& a, const CompactPoint& b);

/// Chordal (Riemann sphere) distance between e^{a+i.alpha} and
/// e^{b+i.beta}, evaluated in cylinder coordinates:
///
///   chi = 2 sqrt(sinh^2((a-b)/2) + sin^2((alpha-beta)/2))
///         / sqrt(cosh(a) cosh(b))
///
/// Stable for all magnitudes of a, b (log-domain evaluation past the
/// cosh overflow range).
double chordal_exp(double a, double alpha, double b, double beta);

/// Sphere distance from e^{a+i.alpha} to 0, resp. to the sphere's own
/// point at infinity; only the modulus enters.
double chordal_to_zero(double a);
double chordal_to_sphere_infinity(double a);

/// Metric on the compactified cylinder (C / 2i pi Z) plus one point at
/// infinity. Both ends of the cylinder are glued to the single added
/// point, so the space is the quotient of the sphere identifying 0 with
/// infinity, and the metric is the quotient metric:
///
///   d(p, q)   = min(chi(Ep, Eq), chi(Ep,0) + chi(Eq,inf),
///               chi(Ep,inf) + chi(Eq,0))
///   d(p, inf) = min(chi(Ep, 0), chi(Ep, inf))
///
/// where E(x, theta) = e^{x + i theta}. Bounded by 4.
double dist_cylinder(const CompactPoint& a, const CompactPoint& b);

double dist(SpaceKind space, const CompactPoint& a, const CompactPoint& b);

/// Unit-circle angle of the stereographic image of a line point;
/// monotone in x, with infinity at +pi. Nearest-neighbor search on the
/// compactified line is ordinary circular search in this coordinate.
double line_angle(const CompactPoint& p);

/// Unit-sphere image of a finite cylinder point:
/// (cos(theta) sech(x), sin(theta) sech(x), tanh(x)).
std::array<double, 3> cylinder_embedding(double x, double theta);

struct MetricAxiomReport {
    std::size_t point_count = 0;
    std::size_t pair_count = 0;
    std::size_t triple_count = 0;
    std::size_t symmetry_violations = 0;
    std::size_t identity_violations = 0;
    std::size_t triangle_violations = 0;
    std::size_t negativity_violations = 0;
    double max_triangle_defect = 0.0;

    bool ok() const {
        return symmetry_violations == 0 && identity_violations == 0 &&
               triangle_violations == 0 && negativity_violations == 0;
    }
    std::size_t total_violations() const {
        return symmetry_violations + identity_violations + triangle_violations +
               negativity_violations;
    }
};

/// Checks symmetry, identity of indiscernibles and the triangle
/// inequality over all pairs/triples of `pts` at tolerance `tol`
/// (default 1e-12). Requires at least 3 points.
MetricAxiomReport check_metric_axioms(SpaceKind space,
                                      const std::vector<CompactPoint>& pts,
                                      double tol = 1e-12);

}  // namespace chab
