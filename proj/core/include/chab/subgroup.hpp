#pragma once

#include <complex>
#include <cstdint>
#include <string>
#include <variant>

#include "chab/compact_point.hpp"

namespace chab {

/// Closed subgroups of the additive reals: trivial, one positive
/// generator, or the full line. The generator of a cyclic subgroup is
/// stored positive (r and -r generate the same set), and generator 0
/// collapses to the trivial variant.
class RSubgroup {
public:
    enum class Kind { Trivial, Cyclic, FullLine };

    static RSubgroup trivial() { return RSubgroup(Kind::Trivial, 0.0); }
    static RSubgroup full_line() { return RSubgroup(Kind::FullLine, 0.0); }
    static RSubgroup cyclic(double r) {
        if (std::isnan(r)) throw std::invalid_argument("RSubgroup: NaN generator");
        if (r < 0.0) r = -r;
        if (r == 0.0) return trivial();
        return RSubgroup(Kind::Cyclic, r);
    }

    Kind kind() const { return kind_; }
    double generator() const { return r_; }

    /// Distance in R from a real number to this set.
    double distance_to(double x) const;
    bool contains(double x, double tol) const { return distance_to(x) <= tol; }

    bool operator==(const RSubgroup& o) const;

    std::string str() const;

private:
    RSubgroup(Kind k, double r) : kind_(k), r_(r) {}
    Kind kind_;
    double r_;
};

/// Closed subgroups of C that contain 2i*pi, in canonical form:
///
///   A(m)     = (2pi/m) i Z                      for m >= 1
///   B(m, z)  = z Z + (2pi/m) i Z                Re(z) > 0, Im(z) in [0, 2pi/m)
///   C(x)     = x Z + i R                        x > 0
///   D(m, t)  = (2pi/m) i Z + (1 + i t) R        m >= 1, t real
///   CInf     = i R
///   Full     = C
///
/// Values are immutable; everything here is a pure function of the
/// parameters. Structural float comparisons use a global 1e-9 tolerance;
/// note that B compares Im(z) circularly modulo its period 2pi/m.
class CStarSubgroup {
public:
    enum class Kind { A, B, C, D, CInfinity, Full };

    /// m = 0 is accepted and identified with i*R (the vertical line is
    /// the m -> infinity degeneration of the A family).
    static CStarSubgroup a(std::int64_t m);
    static CStarSubgroup b(std::int64_t m, std::complex<double> z);  // canonicalizes
    static CStarSubgroup c(double x);
    static CStarSubgroup d(std::int64_t m, double t);
    static CStarSubgroup c_infinity() { return CStarSubgroup(Kind::CInfinity); }
    static CStarSubgroup full() { return CStarSubgroup(Kind::Full); }

    Kind kind() const { return kind_; }
    std::int64_t m() const { return m_; }
    std::complex<double> z() const { return z_; }
    double x() const { return x_; }
    double t() const { return t_; }

    /// Euclidean distance in C from w to this set, in closed form
    /// (nearest lattice point / nearest line per variant).
    double distance_to(std::complex<double> w) const;

    std::string str() const;

private:
    explicit CStarSubgroup(Kind k) : kind_(k) {}
    Kind kind_ = Kind::Full;
    std::int64_t m_ = 0;
    std::complex<double> z_;
    double x_ = 0.0;
    double t_ = 0.0;
};

/// Shift z by the unique multiple of 2i*pi/m that puts Im into
/// [0, 2pi/m). The result denotes the same subset of C.
CStarSubgroup canonicalize_b(std::int64_t m, std::complex<double> z);

/// Set equality of canonical values: structural equality with tolerance
/// 1e-9 on real parameters (Im of a B generator compared modulo the
/// lattice period).
bool subgroups_equal(const CStarSubgroup& a, const CStarSubgroup& b);

/// True iff w is within tol of the set denoted by g.
bool contains(const CStarSubgroup& g, std::complex<double> w, double tol);

enum class IsomorphismType { TrivialRank, Z, Z2, R, ZxR, C };

/// Abstract group type of a canonical value: A -> Z, B -> Z^2,
/// CInf -> R, C and D -> Z x R, Full -> C.
IsomorphismType classify_isomorphism_type(const CStarSubgroup& g);

const char* isomorphism_type_name(IsomorphismType t);

}  // namespace chab
