#include "chab/json_io.hpp"

#include <cmath>
#include <stdexcept>

namespace chab {

using nlohmann::json;

namespace {

json extended_to_json(const ExtendedReal& v) {
    if (v.is_pos_infinity()) return "inf";
    if (v.is_neg_infinity()) return "-inf";
    return v.value();
}

ExtendedReal extended_from_json(const json& j, const char* what) {
    if (j.is_string()) {
        const auto s = j.get<std::string>();
        if (s == "inf" || s == "+inf") return ExtendedReal::infinity();
        if (s == "-inf") return ExtendedReal::minus_infinity();
        throw std::invalid_argument(std::string("bad extended real for ") + what + ": " + s);
    }
    if (!j.is_number())
        throw std::invalid_argument(std::string("bad extended real for ") + what);
    return ExtendedReal(j.get<double>());
}

json int_or_inf_to_json(const IntOrInf& v) {
    if (v.infinite) return "inf";
    return v.value;
}

IntOrInf int_or_inf_from_json(const json& j, const char* what) {
    if (j.is_string()) {
        const auto s = j.get<std::string>();
        if (s == "inf" || s == "+inf") return IntOrInf::inf();
        throw std::invalid_argument(std::string("bad integer limit for ") + what + ": " + s);
    }
    if (!j.is_number_integer())
        throw std::invalid_argument(std::string("bad integer limit for ") + what);
    return IntOrInf::of(j.get<std::int64_t>());
}

}  // namespace

json subgroup_to_json(const SubgroupValue& g) {
    json j;
    if (const auto* r = std::get_if<RSubgroup>(&g)) {
        switch (r->kind()) {
            case RSubgroup::Kind::Trivial: j["family"] = "Trivial"; break;
            case RSubgroup::Kind::FullLine: j["family"] = "Line"; break;
            case RSubgroup::Kind::Cyclic:
                j["family"] = "Cyclic";
                j["r"] = r->generator();
                break;
        }
        return j;
    }
    const auto& c = std::get<CStarSubgroup>(g);
    switch (c.kind()) {
        case CStarSubgroup::Kind::A:
            j["family"] = "A";
            j["m"] = c.m();
            break;
        case CStarSubgroup::Kind::B:
            j["family"] = "B";
            j["m"] = c.m();
            j["z"] = {c.z().real(), c.z().imag()};
            break;
        case CStarSubgroup::Kind::C:
            j["family"] = "C";
            j["x"] = c.x();
            break;
        case CStarSubgroup::Kind::D:
            j["family"] = "D";
            j["m"] = c.m();
            j["t"] = c.t();
            break;
        case CStarSubgroup::Kind::CInfinity: j["family"] = "Cinf"; break;
        case CStarSubgroup::Kind::Full: j["family"] = "Full"; break;
    }
    return j;
}

SubgroupValue subgroup_from_json(const json& j) {
    const auto family = j.at("family").get<std::string>();
    if (family == "Trivial") return RSubgroup::trivial();
    if (family == "Line") return RSubgroup::full_line();
    if (family == "Cyclic") return RSubgroup::cyclic(j.at("r").get<double>());
    if (family == "A") return CStarSubgroup::a(j.at("m").get<std::int64_t>());
    if (family == "B") {
        const auto z = j.at("z");
        return CStarSubgroup::b(j.at("m").get<std::int64_t>(),
                                {z.at(0).get<double>(), z.at(1).get<double>()});
    }
    if (family == "C") return CStarSubgroup::c(j.at("x").get<double>());
    if (family == "D")
        return CStarSubgroup::d(j.at("m").get<std::int64_t>(), j.at("t").get<double>());
    if (family == "Cinf") return CStarSubgroup::c_infinity();
    if (family == "Full") return CStarSubgroup::full();
    throw std::invalid_argument("unknown subgroup family: " + family);
}

json point_to_json(SpaceKind space, const CompactPoint& p) {
    json j;
    if (p.infinite) {
        j["infinity"] = true;
        return j;
    }
    j["x"] = p.x;
    if (space == SpaceKind::CylinderBar) j["theta"] = p.theta;
    return j;
}

json sequence_spec_to_json(const SequenceSpec& s) {
    json j;
    if (const auto* r = std::get_if<RSeq>(&s)) {
        j["family"] = "R";
        j["r_limit"] = extended_to_json(r->r_limit);
        return j;
    }
    if (const auto* a = std::get_if<ASeq>(&s)) {
        j["family"] = "A";
        j["m_limit"] = int_or_inf_to_json(a->m_limit);
        return j;
    }
    if (const auto* b = std::get_if<BSeq>(&s)) {
        j["family"] = "B";
        j["m"] = int_or_inf_to_json(b->m_limit);
        j["re_limit"] = extended_to_json(b->re_limit);
        if (b->theta.irrational) {
            j["theta"] = "irrational";
        } else {
            j["theta"] = {{"p", b->theta.value.num()}, {"q", b->theta.value.den()}};
        }
        if (b->t_limit) j["t_limit"] = extended_to_json(*b->t_limit);
        return j;
    }
    if (const auto* c = std::get_if<CSeq>(&s)) {
        j["family"] = "C";
        j["x_limit"] = extended_to_json(c->x_limit);
        return j;
    }
    const auto& d = std::get<DSeq>(s);
    j["family"] = "D";
    j["m_limit"] = int_or_inf_to_json(d.m_limit);
    j["t_limit"] = extended_to_json(d.t_limit);
    return j;
}

SequenceSpec sequence_spec_from_json(const json& j) {
    const auto family = j.at("family").get<std::string>();
    if (family == "R") return RSeq{extended_from_json(j.at("r_limit"), "r_limit")};
    if (family == "A") return ASeq{int_or_inf_from_json(j.at("m_limit"), "m_limit")};
    if (family == "B") {
        BSeq b;
        b.m_limit = int_or_inf_from_json(j.at("m"), "m");
        b.re_limit = extended_from_json(j.at("re_limit"), "re_limit");
        const auto& th = j.at("theta");
        if (th.is_string() && th.get<std::string>() == "irrational") {
            b.theta = ThetaSpec::irrational_mark();
        } else {
            b.theta = ThetaSpec::rational(
                Rational(th.at("p").get<std::int64_t>(), th.at("q").get<std::int64_t>()));
        }
        if (j.contains("t_limit")) b.t_limit = extended_from_json(j.at("t_limit"), "t_limit");
        return b;
    }
    if (family == "C") return CSeq{extended_from_json(j.at("x_limit"), "x_limit")};
    if (family == "D") {
        DSeq d;
        d.m_limit = int_or_inf_from_json(j.at("m_limit"), "m_limit");
        d.t_limit = extended_from_json(j.at("t_limit"), "t_limit");
        return d;
    }
    throw std::invalid_argument("unknown sequence family: " + family);
}

json hausdorff_to_json(SpaceKind space, const HausdorffResult& r) {
    json j;
    j["value"] = r.value;
    j["directed_ab"] = r.directed_ab;
    j["directed_ba"] = r.directed_ba;
    j["witness_a"] = point_to_json(space, r.witness_a);
    j["witness_b"] = point_to_json(space, r.witness_b);
    j["method"] = r.method;
    return j;
}

json bounded_hausdorff_to_json(SpaceKind space, const BoundedHausdorff& r) {
    json j = hausdorff_to_json(space, r.sample_result);
    j["interval"] = {r.true_sets.lo, r.true_sets.hi};
    return j;
}

json decay_table_to_json(const DecayTable& t) {
    const SpaceKind space = std::holds_alternative<RSubgroup>(t.limit.group)
                                ? SpaceKind::LineBar
                                : SpaceKind::CylinderBar;
    json j;
    j["limit"] = subgroup_to_json(t.limit.group);
    json rows = json::array();
    for (const auto& r : t.rows) {
        json row = hausdorff_to_json(space, r.engine);
        row["n"] = r.n;
        row["d_hausdorff"] = r.d_hausdorff;
        row["interval"] = {r.interval_lo, r.interval_hi};
        row["cov_sequence"] = r.cov_sequence;
        row["cov_limit"] = r.cov_limit;
        rows.push_back(row);
    }
    j["rows"] = rows;
    return j;
}

}  // namespace chab
