#pragma once

#include <cmath>
#include <numbers>

namespace chab {

inline constexpr double kTwoPi = 2.0 * std::numbers::pi_v<double>;

/// Which one-point compactification a point (or point cloud) lives on.
enum class SpaceKind {
    LineBar,      // R together with one point at infinity
    CylinderBar,  // C / 2i*pi*Z together with one point at infinity
};

/// A point of a compactified space: finite coordinates or the single
/// added point at infinity.
///
/// The same struct serves both spaces. On the line only `x` is used; on
/// the cylinder the pair (x, theta) stands for x + i*theta with theta
/// normalized into [0, 2pi).
struct CompactPoint {
    bool infinite = false;
    double x = 0.0;
    double theta = 0.0;

    static CompactPoint infinity() {
        CompactPoint p;
        p.infinite = true;
        return p;
    }

    static CompactPoint line(double x) {
        CompactPoint p;
        p.x = x;
        return p;
    }

    static CompactPoint cylinder(double x, double theta) {
        CompactPoint p;
        p.x = x;
        p.theta = wrap_angle(theta);
        return p;
    }

    /// Reduce into [0, 2pi); values within 1e-12 of 2pi snap to 0 so that
    /// deduplication of samples straddling the seam is a plain adjacency
    /// check after sorting.
    static double wrap_angle(double theta) {
        double t = std::fmod(theta, kTwoPi);
        if (t < 0.0) t += kTwoPi;
        if (t >= kTwoPi - 1e-12) t = 0.0;
        return t;
    }
};

/// Total order used for deterministic witness tie-breaking and sample
/// ordering: infinity first, then (x, theta) lexicographically.
inline bool point_less(const CompactPoint& a, const CompactPoint& b) {
    if (a.infinite != b.infinite) return a.infinite;
    if (a.infinite) return false;
    if (a.x != b.x) return a.x < b.x;
    return a.theta < b.theta;
}

inline bool point_eq(const CompactPoint& a, const CompactPoint& b) {
    if (a.infinite != b.infinite) return false;
    if (a.infinite) return true;
    return a.x == b.x && a.theta == b.theta;
}

}  // namespace chab
