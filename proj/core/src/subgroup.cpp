#include "chab/subgroup.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <sstream>
#include <stdexcept>

namespace chab {

namespace {

double dist_to_multiples(double v, double step) {
    // distance from v to step*Z, step > 0
    const double k = std::round(v / step);
    return std::abs(v - k * step);
}

// circular distance between two angles measured modulo `period`
double circular_diff(double a, double b, double period) {
    double d = std::fmod(std::abs(a - b), period);
    return std::min(d, period - d);
}

}  // namespace

double RSubgroup::distance_to(double x) const {
    switch (kind_) {
        case Kind::Trivial: return std::abs(x);
        case Kind::Cyclic: return dist_to_multiples(x, r_);
        case Kind::FullLine: return 0.0;
    }
    return 0.0;
}

bool RSubgroup::operator==(const RSubgroup& o) const {
    if (kind_ != o.kind_) return false;
    if (kind_ != Kind::Cyclic) return true;
    return std::abs(r_ - o.r_) <= 1e-9;
}

std::string RSubgroup::str() const {
    switch (kind_) {
        case Kind::Trivial: return "{0}";
        case Kind::FullLine: return "R";
        case Kind::Cyclic: {
            std::ostringstream os;
            os << r_ << "Z";
            return os.str();
        }
    }
    return "?";
}

CStarSubgroup CStarSubgroup::a(std::int64_t m) {
    if (m < 0) throw std::invalid_argument("CStarSubgroup::a: negative index");
    if (m == 0) return c_infinity();
    CStarSubgroup g(Kind::A);
    g.m_ = m;
    return g;
}

CStarSubgroup CStarSubgroup::b(std::int64_t m, std::complex<double> z) {
    if (m < 1) throw std::invalid_argument("CStarSubgroup::b: requires m >= 1");
    if (!(z.real() > 0.0))
        throw std::invalid_argument("CStarSubgroup::b: requires Re(z) > 0");
    const double period = kTwoPi / static_cast<double>(m);
    double im = z.imag() - std::floor(z.imag() / period) * period;
    if (im >= period) im -= period;   // guards the floor rounding edge
    if (im < 0.0) im += period;
    CStarSubgroup g(Kind::B);
    g.m_ = m;
    g.z_ = {z.real(), im};
    return g;
}

CStarSubgroup CStarSubgroup::c(double x) {
    if (!(x > 0.0)) throw std::invalid_argument("CStarSubgroup::c: requires x > 0");
    CStarSubgroup g(Kind::C);
    g.x_ = x;
    return g;
}

CStarSubgroup CStarSubgroup::d(std::int64_t m, double t) {
    if (m < 1) throw std::invalid_argument("CStarSubgroup::d: requires m >= 1");
    if (!std::isfinite(t)) throw std::invalid_argument("CStarSubgroup::d: slope must be finite");
    CStarSubgroup g(Kind::D);
    g.m_ = m;
    g.t_ = t;
    return g;
}

double CStarSubgroup::distance_to(std::complex<double> w) const {
    switch (kind_) {
        case Kind::Full:
            return 0.0;
        case Kind::CInfinity:
            return std::abs(w.real());
        case Kind::A: {
            const double step = kTwoPi / static_cast<double>(m_);
            return std::hypot(w.real(), dist_to_multiples(w.imag(), step));
        }
        case Kind::C:
            return dist_to_multiples(w.real(), x_);
        case Kind::D: {
            // lines theta = t*x + 2pi*k/m; perpendicular distance to the
            // nearest one
            const double step = kTwoPi / static_cast<double>(m_);
            const double resid = w.imag() - t_ * w.real();
            return dist_to_multiples(resid, step) / std::sqrt(1.0 + t_ * t_);
        }
        case Kind::B: {
            // w ~ a*z + b*(2pi/m) i: the real part pins a, so only a few
            // integer candidates around Re(w)/Re(z) can be nearest; for
            // each, the optimal b is a rounding.
            const double step = kTwoPi / static_cast<double>(m_);
            const double a_star = w.real() / z_.real();
            // any a with (|a - a_star| - 1)^2 Re(z)^2 > (Re(z)/2)^2 + (step/2)^2
            // is dominated by the rounded candidate
            const double span = 1.0 + std::sqrt(0.25 + (step * step) / (4.0 * z_.real() * z_.real()));
            const std::int64_t lo = static_cast<std::int64_t>(std::floor(a_star - span));
            const std::int64_t hi = static_cast<std::int64_t>(std::ceil(a_star + span));
            double best = std::numeric_limits<double>::infinity();
            for (std::int64_t a = lo; a <= hi; ++a) {
                const double re = w.real() - static_cast<double>(a) * z_.real();
                const double im = w.imag() - static_cast<double>(a) * z_.imag();
                const double d = std::hypot(re, dist_to_multiples(im, step));
                if (d < best) best = d;
            }
            return best;
        }
    }
    return 0.0;
}

std::string CStarSubgroup::str() const {
    std::ostringstream os;
    switch (kind_) {
        case Kind::A: os << "A^" << m_; break;
        case Kind::B: os << "B(" << m_ << ", " << z_.real() << "+" << z_.imag() << "i)"; break;
        case Kind::C: os << "C_" << x_; break;
        case Kind::D: os << "D(" << m_ << ", t=" << t_ << ")"; break;
        case Kind::CInfinity: os << "iR"; break;
        case Kind::Full: os << "C"; break;
    }
    return os.str();
}

CStarSubgroup canonicalize_b(std::int64_t m, std::complex<double> z) {
    return CStarSubgroup::b(m, z);
}

bool subgroups_equal(const CStarSubgroup& a, const CStarSubgroup& b) {
    if (a.kind() != b.kind()) return false;
    constexpr double tol = 1e-9;
    switch (a.kind()) {
        case CStarSubgroup::Kind::Full:
        case CStarSubgroup::Kind::CInfinity:
            return true;
        case CStarSubgroup::Kind::A:
            return a.m() == b.m();
        case CStarSubgroup::Kind::C:
            return std::abs(a.x() - b.x()) <= tol;
        case CStarSubgroup::Kind::D:
            return a.m() == b.m() && std::abs(a.t() - b.t()) <= tol;
        case CStarSubgroup::Kind::B: {
            if (a.m() != b.m()) return false;
            if (std::abs(a.z().real() - b.z().real()) > tol) return false;
            const double period = kTwoPi / static_cast<double>(a.m());
            return circular_diff(a.z().imag(), b.z().imag(), period) <= tol;
        }
    }
    return false;
}

bool contains(const CStarSubgroup& g, std::complex<double> w, double tol) {
    if (tol < 0.0) throw std::invalid_argument("contains: negative tolerance");
    return g.distance_to(w) <= tol;
}

IsomorphismType classify_isomorphism_type(const CStarSubgroup& g) {
    switch (g.kind()) {
        case CStarSubgroup::Kind::A: return IsomorphismType::Z;
        case CStarSubgroup::Kind::B: return IsomorphismType::Z2;
        case CStarSubgroup::Kind::CInfinity: return IsomorphismType::R;
        case CStarSubgroup::Kind::C: return IsomorphismType::ZxR;
        case CStarSubgroup::Kind::D: return IsomorphismType::ZxR;
        case CStarSubgroup::Kind::Full: return IsomorphismType::C;
    }
    return IsomorphismType::TrivialRank;
}

const char* isomorphism_type_name(IsomorphismType t) {
    switch (t) {
        case IsomorphismType::TrivialRank: return "trivial";
        case IsomorphismType::Z: return "Z";
        case IsomorphismType::Z2: return "Z^2";
        case IsomorphismType::R: return "R";
        case IsomorphismType::ZxR: return "ZxR";
        case IsomorphismType::C: return "C";
    }
    return "?";
}

}  // namespace chab
