#pragma once

#include <string>

#include "chab/sample.hpp"

namespace chab {

/// Asymmetric half of the Hausdorff distance: sup over `from` of the
/// distance to the nearest point of the other cloud, with the achieving
/// pair. Ties broken by the lexicographic point order, so results are
/// identical across methods and runs.
struct DirectedResult {
    double value = 0.0;
    CompactPoint from;  // point achieving the sup
    CompactPoint to;    // its nearest point in the other cloud
};

struct HausdorffResult {
    double value = 0.0;        // max(directed_ab, directed_ba)
    double directed_ab = 0.0;
    double directed_ba = 0.0;
    CompactPoint witness_a;    // pair achieving `value`, witness_a in A
    CompactPoint witness_b;
    std::string method;        // "brute" or "grid"
};

/// Exact max-min over the finite clouds, O(|A| * |B|). This is the
/// reference oracle the accelerated path is tested against.
DirectedResult directed_hausdorff(const SubgroupSample& A, const SubgroupSample& B);

HausdorffResult hausdorff_brute(const SubgroupSample& A, const SubgroupSample& B);

/// Accelerated path. On the line, nearest-neighbor queries reduce to
/// circular search in the stereographic angle; on the cylinder, points
/// are hashed by their unit-sphere embedding (chordal distance is the
/// euclidean distance there) and the two glue-through-infinity terms are
/// handled by global precomputes. Agrees with hausdorff_brute to 1e-12.
HausdorffResult hausdorff_grid(const SubgroupSample& A, const SubgroupSample& B);

struct Interval {
    double lo = 0.0;
    double hi = 0.0;
    bool contains(double v) const { return lo <= v && v <= hi; }
};

struct BoundedHausdorff {
    HausdorffResult sample_result;
    Interval true_sets;  // rigorous enclosure of d_H between the true sets
};

/// [max(0, d - cA - cB), d + cA + cB] where d is the sample Hausdorff
/// distance and cA, cB the certified covering radii.
BoundedHausdorff hausdorff_bound_true_sets(const SubgroupSample& A,
                                           const SubgroupSample& B);

/// Reusable nearest-cloud query structure (the inner loop of the grid
/// method); also used to validate covering certificates quickly.
class NearestIndex {
public:
    explicit NearestIndex(const SubgroupSample& sample, double cell_hint = 0.0);
    ~NearestIndex();
    NearestIndex(NearestIndex&&) noexcept;
    NearestIndex& operator=(NearestIndex&&) noexcept;
    NearestIndex(const NearestIndex&) = delete;
    NearestIndex& operator=(const NearestIndex&) = delete;

    /// min over the cloud of dist(space, p, q), with the achieving q.
    std::pair<double, CompactPoint> nearest(const CompactPoint& p) const;

private:
    struct Impl;
    Impl* impl_;
};

}  // namespace chab
