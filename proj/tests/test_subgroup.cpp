#include <doctest.h>

#include <algorithm>
#include <complex>
#include <random>
#include <vector>

#include "chab/json_io.hpp"
#include "chab/rational.hpp"
#include "chab/subgroup.hpp"

using namespace chab;
using std::complex;

namespace {

// Independent oracle: explicit enumeration of the lattice a*z + b*(2pi/m)i.
std::vector<complex<double>> enumerate_lattice(std::int64_t m, complex<double> z,
                                               int max_index, double radius) {
    std::vector<complex<double>> pts;
    const double period = kTwoPi / static_cast<double>(m);
    for (int a = -max_index; a <= max_index; ++a) {
        for (int b = -max_index; b <= max_index; ++b) {
            const complex<double> w = static_cast<double>(a) * z +
                                      complex<double>(0.0, static_cast<double>(b) * period);
            if (std::abs(w) <= radius) pts.push_back(w);
        }
    }
    std::sort(pts.begin(), pts.end(), [](auto u, auto v) {
        if (u.real() != v.real()) return u.real() < v.real();
        return u.imag() < v.imag();
    });
    return pts;
}

bool same_point_sets(const std::vector<complex<double>>& a,
                     const std::vector<complex<double>>& b, double tol) {
    if (a.size() != b.size()) return false;
    for (std::size_t i = 0; i < a.size(); ++i)
        if (std::abs(a[i] - b[i]) > tol) return false;
    return true;
}

double enumerated_distance(std::int64_t m, complex<double> z, complex<double> w,
                           int max_index) {
    double best = std::numeric_limits<double>::infinity();
    const double period = kTwoPi / static_cast<double>(m);
    for (int a = -max_index; a <= max_index; ++a)
        for (int b = -max_index; b <= max_index; ++b)
            best = std::min(best,
                            std::abs(w - (static_cast<double>(a) * z +
                                          complex<double>(0.0, static_cast<double>(b) * period))));
    return best;
}

CStarSubgroup random_canonical(std::mt19937_64& rng) {
    std::uniform_int_distribution<int> kind(0, 5);
    std::uniform_int_distribution<std::int64_t> ms(1, 5);
    std::uniform_real_distribution<double> pos(0.2, 3.0);
    std::uniform_real_distribution<double> any(-3.0, 3.0);
    switch (kind(rng)) {
        case 0: return CStarSubgroup::a(ms(rng));
        case 1: return CStarSubgroup::b(ms(rng), {pos(rng), any(rng)});
        case 2: return CStarSubgroup::c(pos(rng));
        case 3: return CStarSubgroup::d(ms(rng), any(rng));
        case 4: return CStarSubgroup::c_infinity();
        default: return CStarSubgroup::full();
    }
}

}  // namespace

TEST_CASE("rational normalization") {
    CHECK(Rational(2, 4) == Rational(1, 2));
    CHECK(Rational(-2, -4) == Rational(1, 2));
    CHECK(Rational(2, -4) == Rational(-1, 2));
    CHECK(Rational(0, 7) == Rational(0, 1));
    CHECK(Rational(7, 3).mod_one() == Rational(1, 3));
    CHECK(Rational(-1, 3).mod_one() == Rational(2, 3));
    CHECK(Rational(1, 3) < Rational(1, 2));
    CHECK_THROWS_AS(Rational(1, 0), std::invalid_argument);
}

TEST_CASE("r-subgroup canonical generators") {
    CHECK(RSubgroup::cyclic(-2.0) == RSubgroup::cyclic(2.0));
    CHECK(RSubgroup::cyclic(0.0).kind() == RSubgroup::Kind::Trivial);
    CHECK(RSubgroup::cyclic(2.0).distance_to(5.0) == doctest::Approx(1.0));
    CHECK(RSubgroup::full_line().distance_to(17.3) == 0.0);
    CHECK(RSubgroup::trivial().distance_to(-4.0) == 4.0);
}

TEST_CASE("b canonicalization examples") {
    const auto b1 = canonicalize_b(1, {1.0, 0.0});
    CHECK(b1.z().real() == 1.0);
    CHECK(b1.z().imag() == 0.0);

    // one full period above the strip
    const auto b2 = canonicalize_b(1, {1.0, kTwoPi * 1.25});
    CHECK(b2.z().real() == doctest::Approx(1.0));
    CHECK(b2.z().imag() == doctest::Approx(kTwoPi * 0.25));
    CHECK(same_point_sets(enumerate_lattice(1, {1.0, kTwoPi * 1.25}, 50, 20.0),
                          enumerate_lattice(1, b2.z(), 50, 20.0), 1e-9));

    // period pi for m = 2
    const auto b3 = canonicalize_b(2, {0.5, std::numbers::pi_v<double>});
    CHECK(b3.z().real() == doctest::Approx(0.5));
    CHECK(b3.z().imag() == doctest::Approx(0.0));
    CHECK(same_point_sets(enumerate_lattice(2, {0.5, std::numbers::pi_v<double>}, 50, 20.0),
                          enumerate_lattice(2, b3.z(), 50, 20.0), 1e-9));

    CHECK_THROWS_AS(canonicalize_b(1, {0.0, 1.0}), std::invalid_argument);
    CHECK_THROWS_AS(canonicalize_b(1, {-1.0, 1.0}), std::invalid_argument);
}

TEST_CASE("b canonicalization is idempotent and keeps the generator") {
    std::mt19937_64 rng(7);
    std::uniform_int_distribution<std::int64_t> ms(1, 6);
    std::uniform_real_distribution<double> res(0.05, 4.0);
    std::uniform_real_distribution<double> ims(-30.0, 30.0);
    for (int i = 0; i < 200; ++i) {
        const std::int64_t m = ms(rng);
        const complex<double> z{res(rng), ims(rng)};
        const auto g = canonicalize_b(m, z);
        const auto g2 = canonicalize_b(m, g.z());
        CHECK(g.z() == g2.z());
        CHECK(g.z().imag() >= 0.0);
        CHECK(g.z().imag() < kTwoPi / static_cast<double>(m));
        CHECK(contains(g, z, 1e-12));
    }
}

TEST_CASE("set equality") {
    CHECK(subgroups_equal(CStarSubgroup::a(1), CStarSubgroup::a(1)));
    CHECK(!subgroups_equal(CStarSubgroup::a(1), CStarSubgroup::a(2)));
    CHECK(subgroups_equal(canonicalize_b(1, {1.0, 0.0}), canonicalize_b(1, {1.0, kTwoPi})));
    CHECK(!subgroups_equal(CStarSubgroup::c(1.0), CStarSubgroup::d(1, 0.0)));
    // circular comparison across the strip seam
    CHECK(subgroups_equal(canonicalize_b(1, {1.0, 1e-13}),
                          canonicalize_b(1, {1.0, kTwoPi - 1e-13})));
}

TEST_CASE("set equality is an equivalence relation on random values") {
    std::mt19937_64 rng(11);
    std::vector<CStarSubgroup> gs;
    for (int i = 0; i < 40; ++i) gs.push_back(random_canonical(rng));
    for (const auto& g : gs) CHECK(subgroups_equal(g, g));
    for (const auto& g : gs)
        for (const auto& h : gs) CHECK(subgroups_equal(g, h) == subgroups_equal(h, g));
    for (const auto& g : gs)
        for (const auto& h : gs)
            for (const auto& k : gs)
                if (subgroups_equal(g, h) && subgroups_equal(h, k))
                    CHECK(subgroups_equal(g, k));
}

TEST_CASE("membership examples") {
    CHECK(contains(CStarSubgroup::a(1), {0.0, kTwoPi}, 0.0));
    CHECK(contains(CStarSubgroup::d(1, 0.0), {3.7, kTwoPi}, 1e-12));
    CHECK(!contains(CStarSubgroup::b(1, {1.0, 0.0}), {0.5, 0.0}, 1e-9));
    CHECK(contains(CStarSubgroup::full(), {123.0, -4.5}, 0.0));
    CHECK(contains(CStarSubgroup::c_infinity(), {0.0, 0.37}, 0.0));
    CHECK(contains(CStarSubgroup::c(2.0), {-6.0, 0.37}, 1e-12));
    CHECK(!contains(CStarSubgroup::c(2.0), {-7.0, 0.0}, 0.5));
}

TEST_CASE("every family contains the 2i pi lattice") {
    std::mt19937_64 rng(13);
    for (int i = 0; i < 60; ++i) {
        const auto g = random_canonical(rng);
        for (int k = -3; k <= 3; ++k) {
            CAPTURE(g.str());
            CHECK(contains(g, {0.0, kTwoPi * k}, 1e-9));
        }
    }
}

TEST_CASE("lattice distance agrees with explicit enumeration") {
    std::mt19937_64 rng(17);
    std::uniform_int_distribution<std::int64_t> ms(1, 4);
    std::uniform_real_distribution<double> res(0.5, 2.0);
    std::uniform_real_distribution<double> probe(-10.0, 10.0);
    for (int i = 0; i < 100; ++i) {
        const std::int64_t m = ms(rng);
        const double period = kTwoPi / static_cast<double>(m);
        std::uniform_real_distribution<double> ims(0.0, period);
        const auto g = CStarSubgroup::b(m, {res(rng), ims(rng)});
        const complex<double> w{probe(rng), probe(rng)};
        const double closed_form = g.distance_to(w);
        const double brute = enumerated_distance(m, g.z(), w, 50);
        CHECK(closed_form == doctest::Approx(brute).epsilon(1e-9));
        CHECK(contains(g, w, brute + 1e-9));
    }
}

TEST_CASE("isomorphism types") {
    CHECK(classify_isomorphism_type(CStarSubgroup::a(3)) == IsomorphismType::Z);
    CHECK(classify_isomorphism_type(CStarSubgroup::b(2, {1.0, 0.0})) == IsomorphismType::Z2);
    CHECK(classify_isomorphism_type(CStarSubgroup::c(2.0)) == IsomorphismType::ZxR);
    CHECK(classify_isomorphism_type(CStarSubgroup::d(1, -1.0)) == IsomorphismType::ZxR);
    CHECK(classify_isomorphism_type(CStarSubgroup::c_infinity()) == IsomorphismType::R);
    CHECK(classify_isomorphism_type(CStarSubgroup::full()) == IsomorphismType::C);
}

TEST_CASE("degenerate index zero maps to the vertical line") {
    CHECK(CStarSubgroup::a(0).kind() == CStarSubgroup::Kind::CInfinity);
    CHECK_THROWS_AS(CStarSubgroup::d(0, 1.0), std::invalid_argument);
}

TEST_CASE("subgroup json round trip") {
    std::mt19937_64 rng(23);
    for (int i = 0; i < 30; ++i) {
        const SubgroupValue g = random_canonical(rng);
        const auto j = subgroup_to_json(g);
        const SubgroupValue back = subgroup_from_json(j);
        REQUIRE(std::holds_alternative<CStarSubgroup>(back));
        const auto& a = std::get<CStarSubgroup>(g);
        const auto& b = std::get<CStarSubgroup>(back);
        REQUIRE(a.kind() == b.kind());
        // reals survive exactly (shortest-round-trip doubles)
        CHECK(a.m() == b.m());
        CHECK(a.z() == b.z());
        CHECK(a.x() == b.x());
        CHECK(a.t() == b.t());
    }
    for (const SubgroupValue g :
         {SubgroupValue(RSubgroup::trivial()), SubgroupValue(RSubgroup::full_line()),
          SubgroupValue(RSubgroup::cyclic(0.3))}) {
        const SubgroupValue back = subgroup_from_json(subgroup_to_json(g));
        REQUIRE(std::holds_alternative<RSubgroup>(back));
        CHECK(std::get<RSubgroup>(back).kind() == std::get<RSubgroup>(g).kind());
        CHECK(std::get<RSubgroup>(back).generator() == std::get<RSubgroup>(g).generator());
    }
}
