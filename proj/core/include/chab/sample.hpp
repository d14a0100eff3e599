#pragma once

#include <cstdint>
#include <string>
#include <variant>
#include <vector>

#include "chab/compact_point.hpp"
#include "chab/subgroup.hpp"

namespace chab {

using SubgroupValue = std::variant<RSubgroup, CStarSubgroup>;

/// A finite point cloud standing in for a compactified closed subgroup.
///
/// The point at infinity is part of every sampler-produced cloud (the
/// whole family is compactified with the same added point), and
/// `covering_radius` is a certified upper bound, in the compact metric,
/// on the distance from any point of the true set to the cloud. That
/// bound is what turns finite Hausdorff computations into rigorous
/// enclosures for the underlying sets.
struct SubgroupSample {
    SpaceKind space = SpaceKind::LineBar;
    std::vector<CompactPoint> points;  // sorted, deduplicated at 1e-12
    SubgroupValue source = RSubgroup::trivial();
    double trunc_radius = 0.0;   // base-space truncation |x| <= R
    double step = 0.0;           // arclength step for continuous parts
    double covering_radius = 0.0;

    std::size_t size() const { return points.size(); }
    bool has_infinity() const;
};

/// Assembles a cloud directly (sorts and deduplicates). Used by engine
/// tests and the oracle sweep, which need clouds that are not subgroup
/// samples; such clouds carry no covering certificate.
SubgroupSample make_sample(SpaceKind space, std::vector<CompactPoint> points,
                           SubgroupValue source, double trunc_radius,
                           double step, double covering_radius);

/// Trivial -> {0, inf}; Cyclic(r) -> multiples within |x| <= R;
/// FullLine -> delta-grid. covering_radius = 2/sqrt(1+R^2) plus 2*delta
/// for the grid case.
SubgroupSample sample_r_subgroup(const RSubgroup& g, double R, double delta);

/// Lattice / line enumeration per variant inside |x| <= R, continuous
/// parts sampled by arclength at step delta, always plus the point at
/// infinity. covering_radius = 4 e^{-R} (tail past the truncation) plus
/// cosh(g/2) * g where g is the base-space grid gap of the variant.
SubgroupSample sample_cstar_subgroup(const CStarSubgroup& g, double R, double delta);

SubgroupSample sample_subgroup(const SubgroupValue& g, double R, double delta);

/// Draws `probes` random points of the true set (closed-form, from the
/// subgroup value) and returns the maximum distance to the cloud; a
/// correct certificate keeps this below covering_radius.
double certify_covering(const SubgroupSample& s, int probes, std::uint64_t seed);

/// CSV rows `x,theta,is_infinity`; line samples leave theta empty.
std::string sample_csv(const SubgroupSample& s);

}  // namespace chab
