#pragma once

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <variant>
#include <vector>

#include "chab/hausdorff.hpp"
#include "chab/rational.hpp"
#include "chab/sample.hpp"

namespace chab {

/// A value of R together with the two infinities; NaN is rejected.
class ExtendedReal {
public:
    ExtendedReal() : v_(0.0) {}
    explicit ExtendedReal(double v) : v_(v) {
        if (std::isnan(v)) throw std::invalid_argument("ExtendedReal: NaN");
    }
    static ExtendedReal infinity() { return ExtendedReal(std::numeric_limits<double>::infinity()); }
    static ExtendedReal minus_infinity() { return ExtendedReal(-std::numeric_limits<double>::infinity()); }

    double value() const { return v_; }
    bool finite() const { return std::isfinite(v_); }
    bool is_pos_infinity() const { return std::isinf(v_) && v_ > 0; }
    bool is_neg_infinity() const { return std::isinf(v_) && v_ < 0; }

    bool operator==(const ExtendedReal& o) const { return v_ == o.v_; }
    bool operator<(const ExtendedReal& o) const { return v_ < o.v_; }

private:
    double v_;
};

/// A positive integer parameter or its divergence to +infinity.
struct IntOrInf {
    bool infinite = false;
    std::int64_t value = 1;

    static IntOrInf of(std::int64_t v) { return {false, v}; }
    static IntOrInf inf() { return {true, 0}; }
};

/// Exact angle data: a rational p/q, or the bare statement that the
/// angle is irrational. Irrationality is never inferred from floats.
struct ThetaSpec {
    bool irrational = false;
    Rational value;

    static ThetaSpec rational(const Rational& r) { return {false, r}; }
    static ThetaSpec irrational_mark() { return {true, Rational()}; }
};

struct RSeq {
    ExtendedReal r_limit;  // in [0, +inf]
};

struct ASeq {
    IntOrInf m_limit;
};

struct BSeq {
    IntOrInf m_limit;                      // fixed (eventually constant) m, or +inf
    ExtendedReal re_limit;                 // limit of Re(z_n), in [0, +inf]
    ThetaSpec theta;                       // limit of Im(z_n) / 2pi
    std::optional<ExtendedReal> t_limit;   // slope limit; required when re -> 0 with rational theta
};

struct CSeq {
    ExtendedReal x_limit;  // in [0, +inf]
};

struct DSeq {
    IntOrInf m_limit;
    ExtendedReal t_limit;  // in [-inf, +inf]
};

using SequenceSpec = std::variant<RSeq, ASeq, BSeq, CSeq, DSeq>;

struct ChabautyLimit {
    SubgroupValue group = RSubgroup::trivial();
};

/// A sequence whose limit the classification table cannot determine
/// from the given data (e.g. a vanishing real part with rational angle
/// but no slope limit).
class UnderdeterminedError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

/// t_n = 2pi (theta_n - p/q) / x_n, the slope of the line through 0 and
/// q z_n - 2i pi p.
double slope_sequence(double x_n, double theta_n, const Rational& theta);

/// 0 -> full line, +inf -> trivial, interior r -> cyclic(r).
RSubgroup classify_limit_r(const RSeq& s);

/// The full classification table for the cylinder families; total on
/// well-formed specs, throws UnderdeterminedError otherwise.
CStarSubgroup classify_limit_cstar(const SequenceSpec& s);

/// Dispatches to the line or cylinder table.
ChabautyLimit classify_limit(const SequenceSpec& s);

/// lcm(m, q) for coprime (p, q), cross-checked against the identity
/// m q / gcd(p m, q) = lcm(m, q).
std::int64_t lcm_rule(std::int64_t m, std::int64_t p, std::int64_t q);

/// Concrete member of the sequence at index n >= 1, using the fixed
/// schedules: diverging parameters run as n, vanishing ones as 1/n,
/// interior ones as limit*(1 + 1/n), and B angles as
/// theta_n = theta + t x_n / 2pi so the slope sequence is constant.
SubgroupValue instantiate_sequence(const SequenceSpec& s, long long n);

struct DecayRow {
    long long n = 0;
    double d_hausdorff = 0.0;
    double interval_lo = 0.0;
    double interval_hi = 0.0;
    double cov_sequence = 0.0;
    double cov_limit = 0.0;
    HausdorffResult engine;  // full result incl. witnesses, method "grid"
};

struct DecayTable {
    ChabautyLimit limit;
    std::vector<DecayRow> rows;
};

/// Samples the sequence member at each n against a sample of the
/// classified limit and records the Hausdorff distance with its
/// certified true-set interval.
DecayTable verify_convergence(const SequenceSpec& s,
                              const std::vector<long long>& n_values,
                              double R, double delta);

/// CSV rows `n,d_hausdorff,interval_lo,interval_hi`.
std::string decay_csv(const DecayTable& t);

}  // namespace chab
