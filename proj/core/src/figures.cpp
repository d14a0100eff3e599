#include "chab/figures.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <numeric>
#include <stdexcept>

#include "chab/metric.hpp"
#include "chab/svg.hpp"

namespace chab {

namespace {

constexpr const char* kStamp = "chab 0.1.0";

// shared layout constants (documented in the README config reference)
constexpr double kPanelSize = 240.0;
constexpr double kMargin = 24.0;
constexpr double kDotRadius = 2.2;

const char* kAxisStyle = "stroke:#888;stroke-width:1;fill:none";
const char* kCurveStyle = "stroke:#1f5fbf;stroke-width:1.5;fill:none";
const char* kDotStyle = "fill:#c02020;stroke:none";
const char* kFaintStyle = "stroke:#bbb;stroke-width:1;fill:none";

}  // namespace

std::vector<LayerMark> layer_marks(int m, int q_max) {
    if (m < 1) throw std::invalid_argument("layer_marks: m >= 1");
    if (q_max < 1) throw std::invalid_argument("layer_marks: q_max >= 1");
    std::vector<LayerMark> marks;
    for (int q = 1; q <= q_max; ++q) {
        for (int p = 0; p < q; ++p) {
            if (std::gcd(p, q) != 1) continue;
            // the rim parameter lives in one period [0, 1/m)
            if (static_cast<std::int64_t>(p) * m >= q) continue;
            const Rational theta(p, q);
            marks.push_back({theta, lcm_rule(m, theta.num(), theta.den())});
        }
    }
    std::sort(marks.begin(), marks.end(),
              [](const LayerMark& a, const LayerMark& b) { return a.theta < b.theta; });
    return marks;
}

std::string emit_line_points_svg(const std::vector<double>& generators,
                                 double window_radius) {
    if (generators.empty())
        throw std::invalid_argument("emit_line_points_svg: need at least one generator");
    if (!(window_radius > 0.0))
        throw std::invalid_argument("emit_line_points_svg: window radius > 0");

    const double width = kMargin + generators.size() * (kPanelSize + kMargin);
    SvgWriter svg(width, kPanelSize + 2.0 * kMargin + 18.0);
    svg.comment(kStamp);

    for (std::size_t i = 0; i < generators.size(); ++i) {
        const double r = generators[i];
        if (!(r >= 0.0)) throw std::invalid_argument("emit_line_points_svg: generator >= 0");
        const double cx = kMargin + i * (kPanelSize + kMargin) + kPanelSize / 2.0;
        const double cy = kMargin + kPanelSize / 2.0;
        const double rad = kPanelSize / 2.0 - 8.0;
        svg.circle(cx, cy, rad, kFaintStyle);

        // stereographic image of the subgroup: angle 2*atan(x), infinity on top
        auto place = [&](double angle) {
            // angle in (-pi, pi]; draw with infinity (angle pi) at the top
            const double ax = cx + rad * std::sin(angle);
            const double ay = cy + rad * std::cos(angle);
            svg.circle(ax, ay, kDotRadius, kDotStyle);
        };
        place(std::numbers::pi_v<double>);  // the added point
        if (r == 0.0) {
            place(0.0);
        } else {
            const auto K = static_cast<long long>(std::floor(window_radius / r));
            for (long long k = -K; k <= K; ++k)
                place(2.0 * std::atan(static_cast<double>(k) * r));
        }
        svg.text(cx - kPanelSize / 2.0, kMargin + kPanelSize + 16.0,
                 "G_" + SvgWriter::fmt(r), "panel-label");
    }
    return svg.str();
}

std::string emit_d_bouquet_svg(int m_max) {
    if (m_max < 1) throw std::invalid_argument("emit_d_bouquet_svg: m_max >= 1");

    const double size = 2.0 * kPanelSize;
    SvgWriter svg(size, size);
    svg.comment(kStamp);

    // wedge point at the left center; the m-th petal is a circle of
    // radius base/m tangent there, so petals shrink into the wedge
    const double wx = kMargin + 8.0;
    const double wy = size / 2.0;
    const double base = (size - 2.0 * kMargin) / 2.0 - 8.0;

    for (int m = m_max; m >= 1; --m) {
        const double rad = base / m;
        svg.circle(wx + rad, wy, rad, kCurveStyle);
        svg.text(wx + 2.0 * rad + 4.0, wy + 4.0, "D^" + std::to_string(m), "petal-label");
    }
    svg.circle(wx, wy, 3.0, kDotStyle);
    svg.text(wx - 4.0, wy - 8.0, "C", "wedge-label");
    return svg.str();
}

std::string emit_pinching_svg(int m, const Rational& theta) {
    if (m < 1) throw std::invalid_argument("emit_pinching_svg: m >= 1");
    const Rational th = theta.mod_one();

    const double width = kMargin + 4.0 * (kPanelSize + kMargin);
    const double height = kPanelSize + 2.0 * kMargin + 18.0;
    SvgWriter svg(width, height);
    svg.comment(kStamp);

    const double top = kMargin;
    const double h = kPanelSize;

    for (int panel = 0; panel < 4; ++panel) {
        const double left = kMargin + panel * (kPanelSize + kMargin);
        const double cxm = left + kPanelSize / 2.0;
        // the cylinder end, drawn as a vertical edge
        svg.line(left + 20.0, top, left + 20.0, top + h, kAxisStyle);
        const double mark_y = top + h * (1.0 - th.to_double() * m);

        if (panel == 0) {
            svg.circle(left + 20.0, mark_y, 3.0, kDotStyle);
        } else if (panel == 1) {
            // blown up to a slope segment; rays mark loci of constant slope
            const double x0 = left + 40.0;
            const double x1 = left + kPanelSize - 20.0;
            svg.line(x0, top + 16.0, x0, top + h - 16.0, kCurveStyle);
            for (int ray = -2; ray <= 2; ++ray) {
                svg.line(x0, top + h / 2.0 - ray * (h / 2.0 - 16.0) / 2.5, x1,
                         top + h / 2.0 - ray * (h / 2.0 - 2.0) / 2.5,
                         "stroke:#e08030;stroke-width:0.8;fill:none");
            }
            svg.text(x0 - 6.0, top + 10.0, "t=+inf", "slope-label", 9.0);
            svg.text(x0 - 6.0, top + h - 4.0, "t=-inf", "slope-label", 9.0);
        } else if (panel == 2) {
            // endpoints pulled together
            const double x0 = left + 40.0;
            svg.path("M " + SvgWriter::fmt(x0) + " " + SvgWriter::fmt(top + h / 2.0 - 30.0) +
                         " C " + SvgWriter::fmt(x0 + 70.0) + " " + SvgWriter::fmt(top + 8.0) +
                         " " + SvgWriter::fmt(x0 + 70.0) + " " + SvgWriter::fmt(top + h - 8.0) +
                         " " + SvgWriter::fmt(x0) + " " + SvgWriter::fmt(top + h / 2.0 + 30.0),
                     kCurveStyle);
            svg.circle(x0, top + h / 2.0 - 30.0, 2.5, kDotStyle);
            svg.circle(x0, top + h / 2.0 + 30.0, 2.5, kDotStyle);
        } else {
            // pinched: the segment has become a petal through one point
            svg.circle(cxm + 10.0, top + h / 2.0, h / 2.0 - 30.0, kCurveStyle);
            svg.circle(cxm + 10.0 - (h / 2.0 - 30.0), top + h / 2.0, 3.0, kDotStyle);
            svg.text(cxm - (h / 2.0 - 30.0) - 6.0, top + h / 2.0 - 10.0, "C", "wedge-label");
        }
        svg.text(left, top + h + 16.0, "step " + std::to_string(panel + 1), "panel-label", 10.0);
    }
    svg.text(kMargin, top - 8.0,
             "theta=" + th.str() + " -> petal " +
                 std::to_string(lcm_rule(m, th.num(), th.den())),
             "petal-label", 11.0);
    return svg.str();
}

std::string emit_layer_svg(int m, int q_max) {
    const auto marks = layer_marks(m, q_max);

    const double width = 2.0 * kPanelSize + 2.0 * kMargin + 60.0;
    const double height = kPanelSize + 2.0 * kMargin + 18.0;
    SvgWriter svg(width, height);
    svg.comment(kStamp);

    const double left = kMargin + 52.0;
    const double top = kMargin;
    const double h = kPanelSize;
    const double cone_x = left + 2.0 * kPanelSize - 40.0;
    const double cy = top + h / 2.0;

    // cylinder silhouette collapsing to the discrete vertex on the right
    svg.line(left, top, cone_x, cy, kAxisStyle);
    svg.line(left, top + h, cone_x, cy, kAxisStyle);
    svg.line(left, top, left, top + h, kCurveStyle);
    svg.circle(cone_x, cy, 3.0, kDotStyle);
    svg.text(cone_x + 6.0, cy + 4.0, "A^" + std::to_string(m), "cone-label");

    // irrational boundary points all collapse to the full group
    svg.rect(left - 5.0, top, 5.0, h, "fill:#dcdcf4;stroke:none");
    svg.text(left - 46.0, top + 12.0, "irrational: C", "irrational-label", 10.0);

    // rational marks on the left rim, labeled with their petal index
    for (const auto& mark : marks) {
        const double frac = mark.theta.to_double() * m;  // position within one period
        const double y = top + h * (1.0 - frac);
        svg.circle(left, y, 3.0, kDotStyle);
        svg.text(left - 46.0, y + 4.0, mark.theta.str(), "theta-label", 10.0);
        svg.text(left + 8.0, y + 4.0, std::to_string(mark.petal), "petal-label", 11.0);
    }
    svg.text(left, top + h + 16.0,
             "layer m=" + std::to_string(m) + ", q<=" + std::to_string(q_max),
             "panel-label", 11.0);
    return svg.str();
}

std::string emit_decay_curve_svg(const DecayTable& table) {
    if (table.rows.empty())
        throw std::invalid_argument("emit_decay_curve_svg: empty table");

    const double width = 2.0 * kPanelSize;
    const double height = kPanelSize + 2.0 * kMargin;
    SvgWriter svg(width, height);
    svg.comment(kStamp);

    const double left = kMargin + 30.0;
    const double right = width - kMargin;
    const double top = kMargin;
    const double bottom = height - kMargin - 18.0;
    svg.line(left, bottom, right, bottom, kAxisStyle);
    svg.line(left, top, left, bottom, kAxisStyle);

    double lo = std::numeric_limits<double>::infinity(), hi = 0.0;
    for (const auto& r : table.rows) {
        const double v = std::max(r.d_hausdorff, 1e-18);
        lo = std::min(lo, v);
        hi = std::max(hi, v);
    }
    if (hi <= lo) hi = lo * 10.0;
    const double n_lo = std::log(static_cast<double>(table.rows.front().n));
    const double n_hi = std::log(static_cast<double>(table.rows.back().n));

    std::string pts;
    for (const auto& r : table.rows) {
        const double fx = n_hi > n_lo
                              ? (std::log(static_cast<double>(r.n)) - n_lo) / (n_hi - n_lo)
                              : 0.5;
        const double fy = (std::log(std::max(r.d_hausdorff, 1e-18)) - std::log(lo)) /
                          (std::log(hi) - std::log(lo));
        const double px = left + fx * (right - left);
        const double py = bottom - fy * (bottom - top);
        pts += SvgWriter::fmt(px) + "," + SvgWriter::fmt(py) + " ";
        svg.circle(px, py, 2.0, kDotStyle);
        svg.text(px - 8.0, bottom + 14.0, std::to_string(r.n), "tick-label", 9.0);
    }
    svg.polyline(pts, kCurveStyle);
    svg.text(left, top - 6.0, "d_H against n (log-log)", "panel-label", 11.0);
    return svg.str();
}

}  // namespace chab
