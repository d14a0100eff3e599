#include "chab/sequence.hpp"

#include <cmath>
#include <cstdio>
#include <numeric>
#include <sstream>

#include "chab/hausdorff.hpp"

namespace chab {

double slope_sequence(double x_n, double theta_n, const Rational& theta) {
    if (!(x_n > 0.0)) throw std::invalid_argument("slope_sequence: requires x_n > 0");
    return kTwoPi * (theta_n - theta.to_double()) / x_n;
}

RSubgroup classify_limit_r(const RSeq& s) {
    if (s.r_limit.value() < 0.0)
        throw std::invalid_argument("classify_limit_r: negative limit");
    if (s.r_limit.value() == 0.0) return RSubgroup::full_line();
    if (s.r_limit.is_pos_infinity()) return RSubgroup::trivial();
    return RSubgroup::cyclic(s.r_limit.value());
}

namespace {

// the C-family rule, shared with the B row where m_n -> infinity
CStarSubgroup c_family_limit(const ExtendedReal& x) {
    if (x.value() < 0.0) throw std::invalid_argument("classify: negative x limit");
    if (x.value() == 0.0) return CStarSubgroup::full();
    if (x.is_pos_infinity()) return CStarSubgroup::c_infinity();
    return CStarSubgroup::c(x.value());
}

CStarSubgroup classify_b(const BSeq& s) {
    if (s.re_limit.is_neg_infinity() || s.re_limit.value() < 0.0)
        throw std::invalid_argument("classify: B real-part limit must be in [0, inf]");

    if (s.m_limit.infinite) return c_family_limit(s.re_limit);

    const std::int64_t m = s.m_limit.value;
    if (m < 1) throw std::invalid_argument("classify: B requires m >= 1");

    if (s.re_limit.is_pos_infinity()) return CStarSubgroup::a(m);

    if (s.re_limit.value() > 0.0) {
        if (s.theta.irrational)
            throw UnderdeterminedError(
                "underdetermined sequence: interior limit with an irrational angle "
                "has no representable value");
        const double im = kTwoPi * s.theta.value.mod_one().to_double();
        return CStarSubgroup::b(m, {s.re_limit.value(), im});
    }

    // Re(z_n) -> 0: the pinching case
    if (s.theta.irrational) return CStarSubgroup::full();
    const Rational th = s.theta.value.mod_one();
    if (!s.t_limit)
        throw UnderdeterminedError(
            "underdetermined sequence: vanishing real part with rational angle "
            "requires a slope limit");
    const ExtendedReal t = *s.t_limit;
    if (!t.finite()) return CStarSubgroup::full();
    return CStarSubgroup::d(lcm_rule(m, th.num(), th.den()), t.value());
}

}  // namespace

CStarSubgroup classify_limit_cstar(const SequenceSpec& s) {
    if (std::holds_alternative<RSeq>(s))
        throw std::invalid_argument("classify_limit_cstar: got a line-family spec");
    if (const auto* a = std::get_if<ASeq>(&s)) {
        if (a->m_limit.infinite) return CStarSubgroup::c_infinity();
        return CStarSubgroup::a(a->m_limit.value);
    }
    if (const auto* b = std::get_if<BSeq>(&s)) return classify_b(*b);
    if (const auto* c = std::get_if<CSeq>(&s)) return c_family_limit(c->x_limit);
    const auto& d = std::get<DSeq>(s);
    if (d.m_limit.infinite || !d.t_limit.finite()) return CStarSubgroup::full();
    return CStarSubgroup::d(d.m_limit.value, d.t_limit.value());
}

ChabautyLimit classify_limit(const SequenceSpec& s) {
    if (const auto* r = std::get_if<RSeq>(&s)) return {classify_limit_r(*r)};
    return {classify_limit_cstar(s)};
}

std::int64_t lcm_rule(std::int64_t m, std::int64_t p, std::int64_t q) {
    if (m < 1 || q < 1) throw std::invalid_argument("lcm_rule: requires m, q >= 1");
    if (std::gcd(p, q) != 1) throw std::invalid_argument("lcm_rule: p, q must be coprime");
    const std::int64_t l = std::lcm(m, q);
    const std::int64_t via_identity = m * q / std::gcd(p * m, q);
    if (via_identity != l)
        throw std::logic_error("lcm_rule: identity m q / gcd(p m, q) = lcm(m, q) failed");
    return l;
}

namespace {

double vanish(long long n) { return 1.0 / static_cast<double>(n); }
double interior(double limit, long long n) { return limit * (1.0 + vanish(n)); }

CStarSubgroup instantiate_b(const BSeq& s, long long n) {
    if (s.theta.irrational)
        throw UnderdeterminedError(
            "not instantiable: an irrational angle mark carries no numeric value");
    const double th = s.theta.value.mod_one().to_double();

    if (s.m_limit.infinite) {
        double x_n;
        if (s.re_limit.is_pos_infinity()) x_n = static_cast<double>(n);
        else if (s.re_limit.value() == 0.0) x_n = vanish(n);
        else x_n = interior(s.re_limit.value(), n);
        return CStarSubgroup::b(n, {x_n, kTwoPi * th});
    }

    const std::int64_t m = s.m_limit.value;
    if (s.re_limit.is_pos_infinity())
        return CStarSubgroup::b(m, {static_cast<double>(n), kTwoPi * th});
    if (s.re_limit.value() > 0.0)
        return CStarSubgroup::b(m, {interior(s.re_limit.value(), n), kTwoPi * th});

    // vanishing real part: theta_n = theta + t x_n / 2pi keeps the slope
    // sequence constant at t
    if (!s.t_limit)
        throw UnderdeterminedError(
            "underdetermined sequence: vanishing real part with rational angle "
            "requires a slope limit");
    if (!s.t_limit->finite())
        throw UnderdeterminedError(
            "not instantiable: diverging slope is outside the fixed schedules");
    const double x_n = vanish(n);
    const double im = kTwoPi * th + s.t_limit->value() * x_n;
    return CStarSubgroup::b(m, {x_n, im});
}

}  // namespace

SubgroupValue instantiate_sequence(const SequenceSpec& s, long long n) {
    if (n < 1) throw std::invalid_argument("instantiate_sequence: n >= 1");
    if (const auto* r = std::get_if<RSeq>(&s)) {
        if (r->r_limit.value() < 0.0)
            throw std::invalid_argument("instantiate_sequence: negative limit");
        if (r->r_limit.value() == 0.0) return RSubgroup::cyclic(vanish(n));
        if (r->r_limit.is_pos_infinity()) return RSubgroup::cyclic(static_cast<double>(n));
        return RSubgroup::cyclic(interior(r->r_limit.value(), n));
    }
    if (const auto* a = std::get_if<ASeq>(&s)) {
        if (a->m_limit.infinite) return CStarSubgroup::a(n);
        return CStarSubgroup::a(a->m_limit.value);
    }
    if (const auto* b = std::get_if<BSeq>(&s)) return instantiate_b(*b, n);
    if (const auto* c = std::get_if<CSeq>(&s)) {
        if (c->x_limit.value() < 0.0)
            throw std::invalid_argument("instantiate_sequence: negative limit");
        if (c->x_limit.value() == 0.0) return CStarSubgroup::c(vanish(n));
        if (c->x_limit.is_pos_infinity()) return CStarSubgroup::c(static_cast<double>(n));
        return CStarSubgroup::c(interior(c->x_limit.value(), n));
    }
    const auto& d = std::get<DSeq>(s);
    if (d.m_limit.infinite && !d.t_limit.finite())
        throw UnderdeterminedError(
            "not instantiable: index and slope cannot both diverge in the fixed schedules");
    if (d.m_limit.infinite) return CStarSubgroup::d(n, d.t_limit.value());
    if (d.t_limit.is_pos_infinity()) return CStarSubgroup::d(d.m_limit.value, static_cast<double>(n));
    if (d.t_limit.is_neg_infinity()) return CStarSubgroup::d(d.m_limit.value, -static_cast<double>(n));
    return CStarSubgroup::d(d.m_limit.value, d.t_limit.value() + vanish(n));
}

DecayTable verify_convergence(const SequenceSpec& s,
                              const std::vector<long long>& n_values,
                              double R, double delta) {
    DecayTable table;
    table.limit = classify_limit(s);
    const SubgroupSample limit_sample = sample_subgroup(table.limit.group, R, delta);
    for (long long n : n_values) {
        const SubgroupValue g = instantiate_sequence(s, n);
        const SubgroupSample sn = sample_subgroup(g, R, delta);
        const BoundedHausdorff b = hausdorff_bound_true_sets(sn, limit_sample);
        DecayRow row;
        row.n = n;
        row.d_hausdorff = b.sample_result.value;
        row.interval_lo = b.true_sets.lo;
        row.interval_hi = b.true_sets.hi;
        row.cov_sequence = sn.covering_radius;
        row.cov_limit = limit_sample.covering_radius;
        row.engine = b.sample_result;
        table.rows.push_back(row);
    }
    return table;
}

std::string decay_csv(const DecayTable& t) {
    std::ostringstream os;
    os << "n,d_hausdorff,interval_lo,interval_hi\n";
    char buf[64];
    for (const auto& r : t.rows) {
        os << r.n;
        std::snprintf(buf, sizeof buf, ",%.17g", r.d_hausdorff);
        os << buf;
        std::snprintf(buf, sizeof buf, ",%.17g", r.interval_lo);
        os << buf;
        std::snprintf(buf, sizeof buf, ",%.17g", r.interval_hi);
        os << buf << "\n";
    }
    return os.str();
}

}  // namespace chab
