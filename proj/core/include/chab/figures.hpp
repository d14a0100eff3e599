#pragma once

#include <string>
#include <vector>

#include "chab/rational.hpp"
#include "chab/sequence.hpp"

namespace chab {

/// Rational boundary mark of a layer figure: the angle p/q on the left
/// rim and the index of the petal the point blows up to.
struct LayerMark {
    Rational theta;         // in [0, 1/m), reduced
    std::int64_t petal;     // lcm(m, q), regenerated from the classifier rule
};

/// All marks for denominators q <= q_max, sorted by angle.
std::vector<LayerMark> layer_marks(int m, int q_max);

/// Compactified-line pictures: one circle per generator value, dots at
/// the stereographic angles of the multiples (denser circles for
/// smaller generators).
std::string emit_line_points_svg(const std::vector<double>& generators,
                                 double window_radius = 50.0);

/// Bouquet of tangent circles through one wedge point, the m-th of
/// radius proportional to 1/m; each circle carries the slope family
/// label and both slope infinities sit at the wedge.
std::string emit_d_bouquet_svg(int m_max);

/// Four-panel schematic of a rational boundary point blowing up to a
/// slope segment whose endpoints are then pinched together.
std::string emit_pinching_svg(int m, const Rational& theta);

/// One cylinder of lattice subgroups drawn as a truncated cone: right
/// end collapsed to the discrete-limit vertex, left rim annotated with
/// rational marks and their petal indices, irrational rim shading
/// labeled with the full group.
std::string emit_layer_svg(int m, int q_max);

/// Log-log decay polyline of a convergence table.
std::string emit_decay_curve_svg(const DecayTable& table);

}  // namespace chab
