#include <benchmark/benchmark.h>

#include <random>

#include "chab/experiment.hpp"
#include "chab/hausdorff.hpp"
#include "chab/metric.hpp"
#include "chab/sample.hpp"

namespace {

using namespace chab;

void BM_DistLine(benchmark::State& state) {
    const auto a = CompactPoint::line(1.7);
    const auto b = CompactPoint::line(-83.2);
    for (auto _ : state) benchmark::DoNotOptimize(dist_line(a, b));
}
BENCHMARK(BM_DistLine);

void BM_DistCylinder(benchmark::State& state) {
    const auto a = CompactPoint::cylinder(1.7, 0.3);
    const auto b = CompactPoint::cylinder(-8.2, 2.9);
    for (auto _ : state) benchmark::DoNotOptimize(dist_cylinder(a, b));
}
BENCHMARK(BM_DistCylinder);

// `spread` controls how much of the cloud falls into the crushed region
// near the poles of the sphere embedding, the hard case for cell hashing
SubgroupSample cloud(std::size_t n, std::uint64_t seed, double spread = 2.0) {
    std::mt19937_64 rng(seed);
    std::uniform_real_distribution<double> xs(-spread, spread);
    std::uniform_real_distribution<double> th(0.0, kTwoPi);
    std::vector<CompactPoint> pts{CompactPoint::infinity()};
    for (std::size_t i = 0; i < n; ++i)
        pts.push_back(CompactPoint::cylinder(xs(rng), th(rng)));
    return make_sample(SpaceKind::CylinderBar, std::move(pts), CStarSubgroup::full(), spread,
                       0.0, 0.0);
}

void BM_HausdorffBrute(benchmark::State& state) {
    const auto A = cloud(static_cast<std::size_t>(state.range(0)), 1);
    const auto B = cloud(static_cast<std::size_t>(state.range(0)), 2);
    for (auto _ : state) benchmark::DoNotOptimize(hausdorff_brute(A, B).value);
    state.SetComplexityN(state.range(0));
}
BENCHMARK(BM_HausdorffBrute)->Range(256, 4096)->Complexity();

void BM_HausdorffGrid(benchmark::State& state) {
    const auto A = cloud(static_cast<std::size_t>(state.range(0)), 1);
    const auto B = cloud(static_cast<std::size_t>(state.range(0)), 2);
    for (auto _ : state) benchmark::DoNotOptimize(hausdorff_grid(A, B).value);
    state.SetComplexityN(state.range(0));
}
BENCHMARK(BM_HausdorffGrid)->Range(256, 16384)->Complexity();

void BM_SampleLattice(benchmark::State& state) {
    const auto g = CStarSubgroup::b(2, {0.01, 1.0});
    for (auto _ : state)
        benchmark::DoNotOptimize(sample_cstar_subgroup(g, 6.0, 0.05).size());
}
BENCHMARK(BM_SampleLattice);

void BM_NearestQuery(benchmark::State& state) {
    const double spread = static_cast<double>(state.range(1));
    const auto B = cloud(static_cast<std::size_t>(state.range(0)), 3, spread);
    const NearestIndex index(B);
    std::mt19937_64 rng(4);
    std::uniform_real_distribution<double> xs(-spread, spread);
    std::uniform_real_distribution<double> th(0.0, kTwoPi);
    for (auto _ : state) {
        const auto p = CompactPoint::cylinder(xs(rng), th(rng));
        benchmark::DoNotOptimize(index.nearest(p).first);
    }
}
BENCHMARK(BM_NearestQuery)
    ->ArgsProduct({{1024, 8192, 65536}, {2, 8}})
    ->ArgNames({"n", "spread"});

}  // namespace

BENCHMARK_MAIN();
