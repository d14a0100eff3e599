#pragma once

#include <cstdint>
#include <numeric>
#include <stdexcept>
#include <string>

namespace chab {

/// Exact fraction p/q with q >= 1 and gcd(p, q) = 1.
///
/// Angles theta = p/q stay in this form end to end; they are never
/// converted to floating point inside the limit classification, because
/// the rational/irrational dichotomy there is arithmetic, not numeric.
class Rational {
public:
    Rational() : p_(0), q_(1) {}

    Rational(std::int64_t p, std::int64_t q) {
        if (q == 0) throw std::invalid_argument("Rational: zero denominator");
        if (q < 0) { p = -p; q = -q; }
        const std::int64_t g = std::gcd(p < 0 ? -p : p, q);
        p_ = g ? p / g : p;
        q_ = g ? q / g : q;
    }

    std::int64_t num() const { return p_; }
    std::int64_t den() const { return q_; }

    double to_double() const { return static_cast<double>(p_) / static_cast<double>(q_); }

    /// Representative of the same class mod 1, numerator in [0, q).
    Rational mod_one() const {
        std::int64_t r = p_ % q_;
        if (r < 0) r += q_;
        return Rational(r, q_);
    }

    bool operator==(const Rational& o) const { return p_ == o.p_ && q_ == o.q_; }
    bool operator!=(const Rational& o) const { return !(*this == o); }
    bool operator<(const Rational& o) const {
        // q_, o.q_ <= ~1e9 in practice; products fit in __int128 regardless
        return static_cast<__int128>(p_) * o.q_ < static_cast<__int128>(o.p_) * q_;
    }

    std::string str() const { return std::to_string(p_) + "/" + std::to_string(q_); }

private:
    std::int64_t p_;
    std::int64_t q_;
};

}  // namespace chab
