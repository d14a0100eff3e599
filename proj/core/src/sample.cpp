#include "chab/sample.hpp"

#include <algorithm>
#include <cmath>
#include <random>
#include <sstream>
#include <stdexcept>

#include "chab/metric.hpp"

namespace chab {

namespace {

constexpr double kDedupTol = 1e-12;

void sort_dedup(std::vector<CompactPoint>& pts) {
    std::sort(pts.begin(), pts.end(), point_less);
    std::vector<CompactPoint> out;
    out.reserve(pts.size());
    for (const auto& p : pts) {
        if (!out.empty()) {
            const auto& q = out.back();
            if (p.infinite && q.infinite) continue;
            if (!p.infinite && !q.infinite && std::abs(p.x - q.x) <= kDedupTol &&
                std::abs(p.theta - q.theta) <= kDedupTol)
                continue;
        }
        out.push_back(p);
    }
    pts = std::move(out);
}

std::int64_t steps_within(double R, double step) {
    // largest k with k*step <= R, robust to one-ulp dirt in R/step
    return static_cast<std::int64_t>(std::floor(R / step + 1e-9));
}

double grid_term(double g) { return g > 0.0 ? std::cosh(0.5 * g) * g : 0.0; }

void require_positive(double R, double delta) {
    if (!(R > 0.0)) throw std::invalid_argument("sample: truncation radius must be > 0");
    if (!(delta > 0.0)) throw std::invalid_argument("sample: step must be > 0");
}

// refuse point counts that would exhaust memory before anyone notices
void require_tractable(double projected_count) {
    if (projected_count > 2e7)
        throw std::invalid_argument(
            "sample: parameters would produce more than 2e7 points; "
            "increase delta or decrease the truncation radius");
}

// number of angular samples covering the full circle at arclength step
std::int64_t circle_count(double delta) {
    return std::max<std::int64_t>(1, static_cast<std::int64_t>(std::ceil(kTwoPi / delta)));
}

}  // namespace

bool SubgroupSample::has_infinity() const {
    return !points.empty() && points.front().infinite;  // infinity sorts first
}

SubgroupSample make_sample(SpaceKind space, std::vector<CompactPoint> points,
                           SubgroupValue source, double trunc_radius,
                           double step, double covering_radius) {
    SubgroupSample s;
    s.space = space;
    s.points = std::move(points);
    s.source = std::move(source);
    s.trunc_radius = trunc_radius;
    s.step = step;
    s.covering_radius = covering_radius;
    sort_dedup(s.points);
    return s;
}

SubgroupSample sample_r_subgroup(const RSubgroup& g, double R, double delta) {
    require_positive(R, delta);
    std::vector<CompactPoint> pts;
    pts.push_back(CompactPoint::infinity());
    double cov = 2.0 / std::hypot(1.0, R);
    switch (g.kind()) {
        case RSubgroup::Kind::Trivial:
            pts.push_back(CompactPoint::line(0.0));
            break;
        case RSubgroup::Kind::Cyclic: {
            require_tractable(2.0 * R / g.generator());
            const std::int64_t K = steps_within(R, g.generator());
            for (std::int64_t k = -K; k <= K; ++k)
                pts.push_back(CompactPoint::line(static_cast<double>(k) * g.generator()));
            break;
        }
        case RSubgroup::Kind::FullLine: {
            require_tractable(2.0 * R / delta);
            const std::int64_t K = steps_within(R, delta);
            for (std::int64_t k = -K; k <= K; ++k)
                pts.push_back(CompactPoint::line(static_cast<double>(k) * delta));
            cov += 2.0 * delta;
            break;
        }
    }
    return make_sample(SpaceKind::LineBar, std::move(pts), g, R, delta, cov);
}

SubgroupSample sample_cstar_subgroup(const CStarSubgroup& g, double R, double delta) {
    require_positive(R, delta);
    std::vector<CompactPoint> pts;
    pts.push_back(CompactPoint::infinity());
    const double tail = 4.0 * std::exp(-R);
    double gap = 0.0;  // base-space covering gap of the finite part

    switch (g.kind()) {
        case CStarSubgroup::Kind::A: {
            const double step = kTwoPi / static_cast<double>(g.m());
            for (std::int64_t k = 0; k < g.m(); ++k)
                pts.push_back(CompactPoint::cylinder(0.0, static_cast<double>(k) * step));
            break;
        }
        case CStarSubgroup::Kind::B: {
            require_tractable((2.0 * R / g.z().real() + 1.0) * static_cast<double>(g.m()));
            const double period = kTwoPi / static_cast<double>(g.m());
            const std::int64_t A = steps_within(R, g.z().real());
            for (std::int64_t a = -A; a <= A; ++a) {
                const double x = static_cast<double>(a) * g.z().real();
                const double base = static_cast<double>(a) * g.z().imag();
                for (std::int64_t j = 0; j < g.m(); ++j)
                    pts.push_back(CompactPoint::cylinder(x, base + static_cast<double>(j) * period));
            }
            break;
        }
        case CStarSubgroup::Kind::C: {
            require_tractable((2.0 * R / g.x() + 1.0) * (kTwoPi / delta + 1.0));
            const std::int64_t K = steps_within(R, g.x());
            const std::int64_t N = circle_count(delta);
            for (std::int64_t k = -K; k <= K; ++k) {
                const double x = static_cast<double>(k) * g.x();
                for (std::int64_t j = 0; j < N; ++j)
                    pts.push_back(CompactPoint::cylinder(x, static_cast<double>(j) * kTwoPi / static_cast<double>(N)));
            }
            gap = 0.5 * delta;
            break;
        }
        case CStarSubgroup::Kind::D: {
            const double t = g.t();
            const double inv_len = 1.0 / std::sqrt(1.0 + t * t);
            const double cos_a = inv_len;
            const double sin_a = t * inv_len;
            const double offset = kTwoPi / static_cast<double>(g.m());
            require_tractable(static_cast<double>(g.m()) * (2.0 * R / (cos_a * delta) + 1.0));
            const std::int64_t J = steps_within(R / cos_a, delta);
            for (std::int64_t k = 0; k < g.m(); ++k) {
                const double base = static_cast<double>(k) * offset;
                for (std::int64_t j = -J; j <= J; ++j) {
                    const double s = static_cast<double>(j) * delta;
                    pts.push_back(CompactPoint::cylinder(s * cos_a, base + s * sin_a));
                }
            }
            gap = delta;
            break;
        }
        case CStarSubgroup::Kind::CInfinity: {
            const std::int64_t N = circle_count(delta);
            for (std::int64_t j = 0; j < N; ++j)
                pts.push_back(CompactPoint::cylinder(0.0, static_cast<double>(j) * kTwoPi / static_cast<double>(N)));
            gap = 0.5 * delta;
            break;
        }
        case CStarSubgroup::Kind::Full: {
            require_tractable((2.0 * R / delta + 1.0) * (kTwoPi / delta + 1.0));
            const std::int64_t K = steps_within(R, delta);
            const std::int64_t N = circle_count(delta);
            for (std::int64_t k = -K; k <= K; ++k) {
                const double x = static_cast<double>(k) * delta;
                for (std::int64_t j = 0; j < N; ++j)
                    pts.push_back(CompactPoint::cylinder(x, static_cast<double>(j) * kTwoPi / static_cast<double>(N)));
            }
            gap = std::hypot(delta, 0.5 * delta);
            break;
        }
    }
    const double cov = tail + grid_term(gap);
    return make_sample(SpaceKind::CylinderBar, std::move(pts), g, R, delta, cov);
}

SubgroupSample sample_subgroup(const SubgroupValue& g, double R, double delta) {
    if (std::holds_alternative<RSubgroup>(g))
        return sample_r_subgroup(std::get<RSubgroup>(g), R, delta);
    return sample_cstar_subgroup(std::get<CStarSubgroup>(g), R, delta);
}

namespace {

// Random point of the true set, drawn inside |x| <= R + 5 so tail
// behaviour past the truncation is probed as well.
CompactPoint random_true_point(const SubgroupSample& s, std::mt19937_64& rng) {
    const double reach = s.trunc_radius + 5.0;
    std::uniform_real_distribution<double> unit(0.0, 1.0);
    std::uniform_real_distribution<double> span(-reach, reach);
    std::uniform_real_distribution<double> angle(0.0, kTwoPi);

    if (std::holds_alternative<RSubgroup>(s.source)) {
        const auto& g = std::get<RSubgroup>(s.source);
        switch (g.kind()) {
            case RSubgroup::Kind::Trivial: return CompactPoint::line(0.0);
            case RSubgroup::Kind::FullLine: return CompactPoint::line(span(rng));
            case RSubgroup::Kind::Cyclic: {
                const auto K = static_cast<std::int64_t>(std::floor(reach / g.generator()));
                std::uniform_int_distribution<std::int64_t> ks(-K, K);
                return CompactPoint::line(static_cast<double>(K > 0 ? ks(rng) : 0) * g.generator());
            }
        }
    }
    const auto& g = std::get<CStarSubgroup>(s.source);
    switch (g.kind()) {
        case CStarSubgroup::Kind::A: {
            std::uniform_int_distribution<std::int64_t> ks(0, g.m() - 1);
            return CompactPoint::cylinder(0.0, static_cast<double>(ks(rng)) * kTwoPi / static_cast<double>(g.m()));
        }
        case CStarSubgroup::Kind::B: {
            const auto A = static_cast<std::int64_t>(std::floor(reach / g.z().real()));
            std::uniform_int_distribution<std::int64_t> as(-A, A);
            std::uniform_int_distribution<std::int64_t> bs(0, g.m() - 1);
            const auto a = A > 0 ? as(rng) : 0;
            const double x = static_cast<double>(a) * g.z().real();
            const double th = static_cast<double>(a) * g.z().imag() +
                              static_cast<double>(bs(rng)) * kTwoPi / static_cast<double>(g.m());
            return CompactPoint::cylinder(x, th);
        }
        case CStarSubgroup::Kind::C: {
            const auto K = static_cast<std::int64_t>(std::floor(reach / g.x()));
            std::uniform_int_distribution<std::int64_t> ks(-K, K);
            return CompactPoint::cylinder(static_cast<double>(K > 0 ? ks(rng) : 0) * g.x(), angle(rng));
        }
        case CStarSubgroup::Kind::D: {
            const double inv_len = 1.0 / std::sqrt(1.0 + g.t() * g.t());
            std::uniform_int_distribution<std::int64_t> ks(0, g.m() - 1);
            std::uniform_real_distribution<double> arcs(-reach / inv_len, reach / inv_len);
            const double sArc = arcs(rng);
            return CompactPoint::cylinder(sArc * inv_len,
                                          static_cast<double>(ks(rng)) * kTwoPi / static_cast<double>(g.m()) +
                                              sArc * g.t() * inv_len);
        }
        case CStarSubgroup::Kind::CInfinity:
            return CompactPoint::cylinder(0.0, angle(rng));
        case CStarSubgroup::Kind::Full:
            return CompactPoint::cylinder(span(rng), angle(rng));
    }
    return CompactPoint::infinity();
}

}  // namespace

double certify_covering(const SubgroupSample& s, int probes, std::uint64_t seed) {
    if (probes < 1) throw std::invalid_argument("certify_covering: probes must be >= 1");
    std::mt19937_64 rng(seed);
    double worst = 0.0;
    for (int i = 0; i < probes; ++i) {
        const CompactPoint p = random_true_point(s, rng);
        double best = std::numeric_limits<double>::infinity();
        for (const auto& q : s.points) best = std::min(best, dist(s.space, p, q));
        worst = std::max(worst, best);
    }
    return worst;
}

std::string sample_csv(const SubgroupSample& s) {
    std::ostringstream os;
    os << "x,theta,is_infinity\n";
    char buf[64];
    for (const auto& p : s.points) {
        if (p.infinite) {
            os << ",,1\n";
            continue;
        }
        std::snprintf(buf, sizeof buf, "%.17g", p.x);
        os << buf << ",";
        if (s.space == SpaceKind::CylinderBar) {
            std::snprintf(buf, sizeof buf, "%.17g", p.theta);
            os << buf;
        }
        os << ",0\n";
    }
    return os.str();
}

}  // namespace chab
