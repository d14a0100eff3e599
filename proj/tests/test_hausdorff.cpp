#include <doctest.h>

#include <array>
#include <cmath>
#include <random>
#include <thread>

#include "chab/experiment.hpp"
#include "chab/json_io.hpp"
#include "chab/hausdorff.hpp"
#include "chab/metric.hpp"

using namespace chab;

namespace {

SubgroupSample line_cloud(std::vector<CompactPoint> pts) {
    return make_sample(SpaceKind::LineBar, std::move(pts), RSubgroup::full_line(), 0.0, 0.0, 0.0);
}

}  // namespace

TEST_CASE("identical clouds are at distance zero") {
    const auto s = sample_r_subgroup(RSubgroup::cyclic(0.5), 20.0, 0.1);
    const auto h = hausdorff_brute(s, s);
    CHECK(h.value == 0.0);
    CHECK(hausdorff_grid(s, s).value == 0.0);
}

TEST_CASE("directed distance is asymmetric") {
    const auto a = line_cloud({CompactPoint::line(0.0)});
    const auto b = line_cloud({CompactPoint::line(0.0), CompactPoint::infinity()});
    CHECK(directed_hausdorff(a, b).value == 0.0);
    const auto back = directed_hausdorff(b, a);
    CHECK(back.value == 2.0);
    CHECK(back.from.infinite);
    CHECK(back.to.x == 0.0);
}

TEST_CASE("sparse cyclic subgroup against the two-point limit") {
    const auto g = sample_r_subgroup(RSubgroup::cyclic(100.0), 1e4, 1.0);
    const auto limit = sample_r_subgroup(RSubgroup::trivial(), 1e4, 1.0);
    const auto h = hausdorff_brute(g, limit);
    CHECK(h.value == doctest::Approx(2.0 / std::sqrt(10001.0)).epsilon(1e-12));
    CHECK(std::abs(h.witness_a.x) == 100.0);
    CHECK(h.witness_b.infinite);
    CHECK(dist_line(h.witness_a, h.witness_b) == h.value);
    CHECK(h.directed_ba == 0.0);
}

TEST_CASE("dense cyclic subgroup approximates the full line") {
    // generator 1/20 against a grid of step 1/200: every point of either
    // cloud is within 1/40 of the other in base coordinates, and the
    // chordal metric is 2-lipschitz, so d_H <= 1/20
    const auto g = sample_r_subgroup(RSubgroup::cyclic(0.05), 50.0, 1.0);
    const auto full = sample_r_subgroup(RSubgroup::full_line(), 50.0, 0.005);
    const auto brute = hausdorff_brute(g, full);
    CHECK(brute.value <= 0.05);
    const auto wide_g = sample_r_subgroup(RSubgroup::cyclic(0.05), 100.0, 1.0);
    const auto wide = sample_r_subgroup(RSubgroup::full_line(), 100.0, 0.005);
    const auto grid = hausdorff_grid(wide_g, wide);
    CHECK(grid.value <= 0.05);
    CHECK(grid.method == "grid");
}

TEST_CASE("hausdorff distance is a metric on clouds") {
    std::mt19937_64 rng(99);
    for (SpaceKind space : {SpaceKind::LineBar, SpaceKind::CylinderBar}) {
        for (int i = 0; i < 12; ++i) {
            const auto A = random_cloud(space, 60, rng());
            const auto B = random_cloud(space, 60, rng());
            const auto C = random_cloud(space, 60, rng());
            const double ab = hausdorff_brute(A, B).value;
            const double ba = hausdorff_brute(B, A).value;
            const double bc = hausdorff_brute(B, C).value;
            const double ac = hausdorff_brute(A, C).value;
            CHECK(ab == ba);
            CHECK(ac <= ab + bc + 1e-12);
            CHECK(ab >= 0.0);
        }
    }
}

TEST_CASE("zero distance only for equal point sets") {
    std::vector<CompactPoint> pts{CompactPoint::infinity(), CompactPoint::line(0.5),
                                  CompactPoint::line(-2.0)};
    const auto a = line_cloud(pts);
    pts.push_back(CompactPoint::line(7.0));
    const auto b = line_cloud(pts);
    CHECK(hausdorff_brute(a, a).value == 0.0);
    CHECK(hausdorff_brute(a, b).value > 0.0);
}

TEST_CASE("grid equals brute on random cloud pairs") {
    std::mt19937_64 rng(4242);
    for (SpaceKind space : {SpaceKind::LineBar, SpaceKind::CylinderBar}) {
        for (int i = 0; i < 40; ++i) {
            const bool near_inf = (i % 4) == 3;
            const auto A = random_cloud(space, 300, rng(), near_inf);
            const auto B = random_cloud(space, 300, rng(), near_inf);
            const auto hb = hausdorff_brute(A, B);
            const auto hg = hausdorff_grid(A, B);
            CAPTURE(i);
            CHECK(std::abs(hb.value - hg.value) <= 1e-12);
            CHECK(std::abs(hb.directed_ab - hg.directed_ab) <= 1e-12);
            CHECK(std::abs(hb.directed_ba - hg.directed_ba) <= 1e-12);
            // both witness pairs achieve their value
            CHECK(dist(space, hg.witness_a, hg.witness_b) == doctest::Approx(hg.value));
        }
    }
}

TEST_CASE("grid equals brute for a singleton against a large grid") {
    const auto big = sample_cstar_subgroup(CStarSubgroup::full(), 4.0, 0.1);
    REQUIRE(big.size() > 5000);
    const auto tiny = make_sample(SpaceKind::CylinderBar,
                                  {CompactPoint::cylinder(1.3, 2.2)},
                                  CStarSubgroup::full(), 0.0, 0.0, 0.0);
    const auto hb = hausdorff_brute(tiny, big);
    const auto hg = hausdorff_grid(tiny, big);
    CHECK(std::abs(hb.value - hg.value) <= 1e-12);
}

TEST_CASE("space mismatch is rejected") {
    const auto a = sample_r_subgroup(RSubgroup::trivial(), 1.0, 1.0);
    const auto b = sample_cstar_subgroup(CStarSubgroup::a(1), 1.0, 1.0);
    CHECK_THROWS_AS(hausdorff_brute(a, b), std::invalid_argument);
    CHECK_THROWS_AS(hausdorff_grid(a, b), std::invalid_argument);
    CHECK_THROWS_AS(directed_hausdorff(a, b), std::invalid_argument);
}

TEST_CASE("interval bound contains zero for two samplings of one set") {
    const auto coarse = sample_r_subgroup(RSubgroup::full_line(), 30.0, 0.11);
    const auto fine = sample_r_subgroup(RSubgroup::full_line(), 40.0, 0.07);
    const auto bound = hausdorff_bound_true_sets(coarse, fine);
    CHECK(bound.true_sets.contains(0.0));
    CHECK(bound.true_sets.lo == 0.0);
}

TEST_CASE("interval bound for a nearly pinched lattice against its limit") {
    const auto b = sample_cstar_subgroup(
        CStarSubgroup::b(1, {0.01, kTwoPi * 0.5}), 8.0, 0.005);
    const auto d = sample_cstar_subgroup(CStarSubgroup::d(2, 0.0), 8.0, 0.005);
    const auto bound = hausdorff_bound_true_sets(b, d);
    CHECK(bound.true_sets.hi <= 0.1);
}

TEST_CASE("interval bound separates genuinely distinct limits") {
    const auto a = sample_cstar_subgroup(CStarSubgroup::a(1), 4.0, 0.1);
    const auto full = sample_cstar_subgroup(CStarSubgroup::full(), 4.0, 0.1);
    const auto bound = hausdorff_bound_true_sets(a, full);
    CHECK(bound.true_sets.lo > 0.0);
}

TEST_CASE("distance to the two-point limit decreases for sparser subgroups") {
    const auto limit = sample_r_subgroup(RSubgroup::trivial(), 1e4, 1.0);
    double prev = 3.0;
    for (double r : {10.0, 30.0, 100.0, 300.0, 1000.0}) {
        const auto s = sample_r_subgroup(RSubgroup::cyclic(r), 1e4, 1.0);
        const double d = hausdorff_grid(s, limit).value;
        CHECK(d < prev);
        CHECK(d == doctest::Approx(2.0 / std::sqrt(1.0 + r * r)).epsilon(1e-12));
        prev = d;
    }
}

TEST_CASE("shared immutable samples are safe across threads") {
    const auto A = sample_cstar_subgroup(CStarSubgroup::b(2, {0.2, 0.9}), 5.0, 0.05);
    const auto B = sample_cstar_subgroup(CStarSubgroup::d(2, 1.0), 5.0, 0.05);
    const double expect = hausdorff_grid(A, B).value;
    std::vector<std::thread> workers;
    std::array<double, 4> results{};
    for (int i = 0; i < 4; ++i)
        workers.emplace_back([&, i] { results[static_cast<std::size_t>(i)] = hausdorff_grid(A, B).value; });
    for (auto& w : workers) w.join();
    for (double v : results) CHECK(v == expect);
}

TEST_CASE("result serialization carries witnesses and method") {
    const auto g = sample_r_subgroup(RSubgroup::cyclic(100.0), 1e4, 1.0);
    const auto limit = sample_r_subgroup(RSubgroup::trivial(), 1e4, 1.0);
    const auto bound = hausdorff_bound_true_sets(g, limit);
    const auto j = bounded_hausdorff_to_json(SpaceKind::LineBar, bound);
    CHECK(j.at("method") == "grid");
    CHECK(j.at("value").get<double>() == bound.sample_result.value);
    CHECK(j.at("directed_ab").get<double>() == bound.sample_result.directed_ab);
    CHECK(j.at("witness_a").at("x").get<double>() == bound.sample_result.witness_a.x);
    CHECK(j.at("witness_b").at("infinity") == true);
    CHECK(j.at("interval").at(0).get<double>() == bound.true_sets.lo);
    CHECK(j.at("interval").at(1).get<double>() == bound.true_sets.hi);

    const auto two = sample_cstar_subgroup(CStarSubgroup::a(2), 2.0, 0.5);
    const auto one = sample_cstar_subgroup(CStarSubgroup::a(1), 2.0, 0.5);
    const auto h = hausdorff_brute(two, one);
    const auto jc = hausdorff_to_json(SpaceKind::CylinderBar, h);
    CHECK(jc.at("method") == "brute");
    CHECK(jc.at("witness_a").contains("theta"));  // the lone off-circle point
}

TEST_CASE("distance to the full-line sample drops to the sampling floor") {
    double prev = 3.0;
    for (double r : {1.0, 0.5, 0.25, 0.125}) {
        const auto s = sample_r_subgroup(RSubgroup::cyclic(r), 40.0, 1.0);
        const auto full = sample_r_subgroup(RSubgroup::full_line(), 40.0, 0.01);
        const double d = hausdorff_grid(s, full).value;
        CHECK(d <= prev + 1e-12);
        prev = d;
    }
    CHECK(prev <= 0.15);
}
