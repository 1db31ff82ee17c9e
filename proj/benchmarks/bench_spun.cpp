#include <benchmark/benchmark.h>

#include <random>

#include "spun/cone.hpp"
#include "spun/cusp.hpp"
#include "spun/normalize.hpp"
#include "spun/spin.hpp"

using namespace spun;

namespace {

const std::string kData = SPUN_TEST_DATA;

MatchingSystem random_system(std::mt19937& rng, int columns, int rows) {
    std::vector<std::vector<long>> r(static_cast<std::size_t>(rows), std::vector<long>(static_cast<std::size_t>(columns)));
    for (auto& row : r)
        for (auto& x : row) x = static_cast<long>(rng() % 5) - 2;
    return matching_system_from_rows(columns, r);
}

void BM_ExtremalRaysFixture(benchmark::State& state) {
    const auto tri = load_triangulation(kData + (state.range(0) ? "/figure8_double.tri" : "/figure8.tri"));
    const auto m = build_matching_system(tri);
    for (auto _ : state) benchmark::DoNotOptimize(extremal_rays(m));
}
BENCHMARK(BM_ExtremalRaysFixture)->Arg(0)->Arg(1);

void BM_ExtremalRaysRandom(benchmark::State& state) {
    std::mt19937 rng(5);
    const int columns = static_cast<int>(state.range(0));
    const auto m = random_system(rng, columns, columns / 3);
    for (auto _ : state) benchmark::DoNotOptimize(extremal_rays(m));
}
BENCHMARK(BM_ExtremalRaysRandom)->Arg(6)->Arg(9)->Arg(12);

void BM_BruteForceRays(benchmark::State& state) {
    std::mt19937 rng(5);
    const auto m = random_system(rng, 6, 2);
    for (auto _ : state) benchmark::DoNotOptimize(brute_force_rays(m, static_cast<int>(state.range(0))));
}
BENCHMARK(BM_BruteForceRays)->Arg(4)->Arg(8);

void BM_NormalizeCorpusPattern(benchmark::State& state) {
    const auto tri = load_triangulation(kData + "/figure8.tri");
    auto p = pattern_from_surface(tri, vertex_link_vector(tri, 0));
    // Stack fingers at the first feasible spot until enough are in place.
    for (int fingers = 0; fingers < state.range(0);) {
        const auto arcs = face_arcs(tri, p);
        bool moved = false;
        for (int a = 0; a < static_cast<int>(arcs[0].size()) && !moved; ++a)
            for (int g = 0; g <= p.points[static_cast<std::size_t>(tri.slot(0, 3).edge_class)] && !moved; ++g)
                if (auto q = finger_move(tri, p, 0, 0, a, 3, g)) {
                    p = std::move(*q);
                    moved = true;
                }
        if (!moved) break;
        ++fingers;
    }
    for (auto _ : state) benchmark::DoNotOptimize(normalize(tri, p, 1000));
    state.counters["weight"] = static_cast<double>(p.edge_weight());
}
BENCHMARK(BM_NormalizeCorpusPattern)->Arg(1)->Arg(4)->Arg(16);

void BM_SpinLevels(benchmark::State& state) {
    const auto tri = load_triangulation(kData + "/figure8.tri");
    const CuspLink link(tri, 0);
    const auto model = spun_end_model(link, peripheral_basis(tri, link));
    for (auto _ : state) benchmark::DoNotOptimize(spin_level_counts(model, {-4, 1}, static_cast<int>(state.range(0))));
}
BENCHMARK(BM_SpinLevels)->Arg(1)->Arg(10);

}  // namespace

BENCHMARK_MAIN();
