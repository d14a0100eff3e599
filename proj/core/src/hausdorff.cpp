#include "chab/hausdorff.hpp"

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <limits>
#include <stdexcept>
#include <unordered_map>
#include <vector>

#include "chab/metric.hpp"

namespace chab {

namespace {

void require_same_space(const SubgroupSample& A, const SubgroupSample& B) {
    if (A.space != B.space)
        throw std::invalid_argument("hausdorff: samples live on different spaces");
    if (A.points.empty() || B.points.empty())
        throw std::invalid_argument("hausdorff: empty cloud");
}

struct Candidate {
    double value = std::numeric_limits<double>::infinity();
    CompactPoint point;

    void offer(double v, const CompactPoint& p) {
        if (v < value || (v == value && point_less(p, point))) {
            value = v;
            point = p;
        }
    }
};

}  // namespace

// ---------------------------------------------------------------------------
// NearestIndex

struct NearestIndex::Impl {
    const SubgroupSample* sample = nullptr;
    SpaceKind space = SpaceKind::LineBar;

    // line: points sorted by stereographic angle
    std::vector<double> angles;
    std::vector<std::uint32_t> order;  // angle-sorted indices into sample->points

    // cylinder: uniform cells over the sphere embedding
    double cell = 0.0;
    std::unordered_map<std::uint64_t, std::vector<std::uint32_t>> cells;
    std::vector<std::array<double, 3>> embed;  // per entry
    std::vector<std::uint32_t> entry_point;    // entry -> index into sample->points
    std::vector<std::uint32_t> landmarks;      // entry subset for seeding
    double glue_zero = std::numeric_limits<double>::infinity();  // min chi(Q, 0) over finite Q
    double glue_inf = std::numeric_limits<double>::infinity();   // min chi(Q, inf)
    CompactPoint glue_zero_witness;
    CompactPoint glue_inf_witness;
    bool has_infinity = false;

    std::uint64_t cell_key(const std::array<double, 3>& e) const {
        const auto ix = static_cast<std::uint64_t>((e[0] + 2.0) / cell);
        const auto iy = static_cast<std::uint64_t>((e[1] + 2.0) / cell);
        const auto iz = static_cast<std::uint64_t>((e[2] + 2.0) / cell);
        return ix | (iy << 21) | (iz << 42);
    }

    void build_line() {
        const auto& pts = sample->points;
        order.resize(pts.size());
        for (std::uint32_t i = 0; i < pts.size(); ++i) order[i] = i;
        std::sort(order.begin(), order.end(), [&](std::uint32_t a, std::uint32_t b) {
            return line_angle(pts[a]) < line_angle(pts[b]);
        });
        angles.reserve(pts.size());
        for (auto i : order) angles.push_back(line_angle(pts[i]));
    }

    void build_cylinder(double cell_hint) {
        const auto& pts = sample->points;
        // target a handful of points per occupied cell; a covering-radius
        // hint can only shrink cells further (denser structure)
        const double n_scale =
            2.0 / std::clamp(std::cbrt(static_cast<double>(pts.size())), 4.0, 128.0);
        cell = std::clamp(std::min(cell_hint > 0.0 ? cell_hint : 0.5, n_scale), 1e-3, 0.5);

        for (std::uint32_t i = 0; i < pts.size(); ++i) {
            const auto& p = pts[i];
            if (p.infinite) {
                has_infinity = true;
                // the glued point sits at both poles of the sphere
                embed.push_back({0.0, 0.0, 1.0});
                entry_point.push_back(i);
                embed.push_back({0.0, 0.0, -1.0});
                entry_point.push_back(i);
                continue;
            }
            embed.push_back(cylinder_embedding(p.x, p.theta));
            entry_point.push_back(i);
            const double to_zero = chordal_to_zero(p.x);
            const double to_inf = chordal_to_sphere_infinity(p.x);
            if (to_zero < glue_zero) {
                glue_zero = to_zero;
                glue_zero_witness = p;
            }
            if (to_inf < glue_inf) {
                glue_inf = to_inf;
                glue_inf_witness = p;
            }
        }
        for (std::uint32_t e = 0; e < embed.size(); ++e)
            cells[cell_key(embed[e])].push_back(e);

        const std::size_t stride = std::max<std::size_t>(1, embed.size() / 24);
        for (std::size_t e = 0; e < embed.size(); e += stride) landmarks.push_back(static_cast<std::uint32_t>(e));
    }

    Candidate nearest_line(const CompactPoint& p) const {
        const auto& pts = sample->points;
        const double a = line_angle(p);
        const std::size_t n = angles.size();
        Candidate best;
        const auto it = std::lower_bound(angles.begin(), angles.end(), a);
        const auto center = static_cast<std::int64_t>(it - angles.begin());
        for (std::int64_t off = -2; off <= 2; ++off) {
            const std::int64_t j = ((center + off) % static_cast<std::int64_t>(n) +
                                    static_cast<std::int64_t>(n)) % static_cast<std::int64_t>(n);
            const auto& q = pts[order[static_cast<std::size_t>(j)]];
            best.offer(dist_line(p, q), q);
        }
        return best;
    }

    Candidate nearest_cylinder(const CompactPoint& p) const {
        const auto& pts = sample->points;
        Candidate best;

        if (p.infinite) {
            if (has_infinity) {
                best.offer(0.0, CompactPoint::infinity());
                return best;
            }
            if (std::isfinite(glue_zero)) best.offer(glue_zero, glue_zero_witness);
            if (std::isfinite(glue_inf)) best.offer(glue_inf, glue_inf_witness);
            return best;
        }

        // glue routes through the identified point 0 ~ inf
        const double p_zero = chordal_to_zero(p.x);
        const double p_inf = chordal_to_sphere_infinity(p.x);
        if (std::isfinite(glue_inf)) best.offer(p_zero + glue_inf, glue_inf_witness);
        if (std::isfinite(glue_zero)) best.offer(p_inf + glue_zero, glue_zero_witness);

        // landmark seeds bound the ring expansion
        for (auto e : landmarks) {
            const auto& q = pts[entry_point[e]];
            best.offer(dist_cylinder(p, q), q);
        }

        const auto pe = cylinder_embedding(p.x, p.theta);
        const auto cx = static_cast<std::int64_t>((pe[0] + 2.0) / cell);
        const auto cy = static_cast<std::int64_t>((pe[1] + 2.0) / cell);
        const auto cz = static_cast<std::int64_t>((pe[2] + 2.0) / cell);
        const auto k_max = static_cast<std::int64_t>(4.0 / cell) + 2;
        std::size_t visited = 0;

        for (std::int64_t k = 0; k <= k_max; ++k) {
            if (static_cast<double>(k - 1) * cell > best.value) break;
            const std::size_t shell_cells = k == 0 ? 1 : static_cast<std::size_t>(24 * k * k + 2);
            if (visited + shell_cells > 65536) {  // degenerate layout: scan everything once
                for (std::uint32_t e = 0; e < embed.size(); ++e) {
                    const auto& q = pts[entry_point[e]];
                    best.offer(dist_cylinder(p, q), q);
                }
                break;
            }
            visited += shell_cells;
            for (std::int64_t dx = -k; dx <= k; ++dx) {
                for (std::int64_t dy = -k; dy <= k; ++dy) {
                    for (std::int64_t dz = -k; dz <= k; ++dz) {
                        if (std::max({std::abs(dx), std::abs(dy), std::abs(dz)}) != k)
                            continue;  // shell only
                        if (cx + dx < 0 || cy + dy < 0 || cz + dz < 0) continue;
                        const std::uint64_t key =
                            static_cast<std::uint64_t>(cx + dx) |
                            (static_cast<std::uint64_t>(cy + dy) << 21) |
                            (static_cast<std::uint64_t>(cz + dz) << 42);
                        const auto it = cells.find(key);
                        if (it == cells.end()) continue;
                        for (auto e : it->second) {
                            const auto& q = pts[entry_point[e]];
                            best.offer(dist_cylinder(p, q), q);
                        }
                    }
                }
            }
        }
        return best;
    }
};

NearestIndex::NearestIndex(const SubgroupSample& sample, double cell_hint)
    : impl_(new Impl) {
    impl_->sample = &sample;
    impl_->space = sample.space;
    if (sample.points.empty())
        throw std::invalid_argument("NearestIndex: empty cloud");
    if (sample.space == SpaceKind::LineBar)
        impl_->build_line();
    else
        impl_->build_cylinder(cell_hint);
}

NearestIndex::~NearestIndex() { delete impl_; }
NearestIndex::NearestIndex(NearestIndex&& o) noexcept : impl_(o.impl_) { o.impl_ = nullptr; }
NearestIndex& NearestIndex::operator=(NearestIndex&& o) noexcept {
    std::swap(impl_, o.impl_);
    return *this;
}

std::pair<double, CompactPoint> NearestIndex::nearest(const CompactPoint& p) const {
    const Candidate c = impl_->space == SpaceKind::LineBar ? impl_->nearest_line(p)
                                                           : impl_->nearest_cylinder(p);
    return {c.value, c.point};
}

// ---------------------------------------------------------------------------
// directed / symmetric distances

DirectedResult directed_hausdorff(const SubgroupSample& A, const SubgroupSample& B) {
    require_same_space(A, B);
    DirectedResult r;
    r.value = -1.0;
    for (const auto& a : A.points) {
        Candidate inner;
        for (const auto& b : B.points) inner.offer(dist(A.space, a, b), b);
        if (inner.value > r.value) {
            r.value = inner.value;
            r.from = a;
            r.to = inner.point;
        }
    }
    return r;
}

namespace {

DirectedResult directed_with_index(const SubgroupSample& A, const NearestIndex& index) {
    DirectedResult r;
    r.value = -1.0;
    bool have_prev = false;
    CompactPoint prev_to;
    for (const auto& a : A.points) {
        // a cheap upper bound below the running max lets us skip the query
        if (have_prev && dist(A.space, a, prev_to) <= r.value) continue;
        const auto [v, to] = index.nearest(a);
        prev_to = to;
        have_prev = true;
        if (v > r.value) {
            r.value = v;
            r.from = a;
            r.to = to;
        }
    }
    return r;
}

HausdorffResult combine(const SubgroupSample& A, const SubgroupSample& B,
                        DirectedResult ab, DirectedResult ba, const char* method) {
    (void)A;
    (void)B;
    HausdorffResult h;
    h.directed_ab = ab.value;
    h.directed_ba = ba.value;
    h.method = method;
    if (ab.value >= ba.value) {
        h.value = ab.value;
        h.witness_a = ab.from;
        h.witness_b = ab.to;
    } else {
        h.value = ba.value;
        h.witness_a = ba.to;
        h.witness_b = ba.from;
    }
    return h;
}

}  // namespace

HausdorffResult hausdorff_brute(const SubgroupSample& A, const SubgroupSample& B) {
    require_same_space(A, B);
    return combine(A, B, directed_hausdorff(A, B), directed_hausdorff(B, A), "brute");
}

HausdorffResult hausdorff_grid(const SubgroupSample& A, const SubgroupSample& B) {
    require_same_space(A, B);
    const double hint = std::max(A.covering_radius, B.covering_radius);
    NearestIndex ib(B, hint);
    NearestIndex ia(A, hint);
    return combine(A, B, directed_with_index(A, ib), directed_with_index(B, ia), "grid");
}

BoundedHausdorff hausdorff_bound_true_sets(const SubgroupSample& A,
                                           const SubgroupSample& B) {
    BoundedHausdorff out;
    out.sample_result = hausdorff_grid(A, B);
    const double slack = A.covering_radius + B.covering_radius;
    out.true_sets.lo = std::max(0.0, out.sample_result.value - slack);
    out.true_sets.hi = out.sample_result.value + slack;
    return out;
}

}  // namespace chab
