#include <benchmark/benchmark.h>

#include "rspan/chow_formal.hpp"
#include "rspan/lattice_geometry.hpp"
#include "rspan/oracle.hpp"
#include "rspan/toric_bdiv.hpp"

using namespace rspan;

namespace {

LatticePolytope cube_like(std::size_t n, long long side)
{
    std::vector<LatticePoint> pts;
    for (std::size_t mask = 0; mask < (std::size_t{1} << n); ++mask) {
        LatticePoint p(n);
        for (std::size_t i = 0; i < n; ++i)
            p[i] = (mask >> i & 1) ? side + static_cast<long long>(i) : 0;
        pts.push_back(p);
    }
    return LatticePolytope::hull(pts);
}

void BM_MixedVolume(benchmark::State& state)
{
    const auto n = static_cast<std::size_t>(state.range(0));
    std::vector<LatticePolytope> ps;
    for (std::size_t i = 0; i < n; ++i)
        ps.push_back(cube_like(n, static_cast<long long>(i + 1)));
    for (auto _ : state)
        benchmark::DoNotOptimize(mixed_volume(ps));
}
BENCHMARK(BM_MixedVolume)->DenseRange(2, 4)->Unit(benchmark::kMillisecond);

void BM_TorusCount(benchmark::State& state)
{
    const auto k = static_cast<unsigned>(state.range(0));
    MonomialSubspace sq(2, {{0, 0}, {1, 0}, {0, 1}, {1, 1}});
    MonomialSubspace tri(2, {{0, 0}, {2, 1}, {1, 3}});
    std::vector<MonomialSubspace> s{sq, tri};
    const auto sys = sample_system(s, 7, 1);
    for (auto _ : state)
        benchmark::DoNotOptimize(count_torus_solutions(sys, k));
    state.counters["points"] = static_cast<double>(torus_size(7, k, 2));
}
BENCHMARK(BM_TorusCount)->DenseRange(1, 4)->Unit(benchmark::kMillisecond);

void BM_BDivIndex(benchmark::State& state)
{
    MonomialSubspace a(3, {{0, 0, 0}, {2, 0, 0}, {0, 2, 0}, {0, 0, 2}, {1, 1, 1}});
    MonomialSubspace b(3, {{0, 0, 0}, {1, 0, 0}, {0, 1, 0}, {0, 0, 1}, {1, 1, 1}});
    std::vector<BDivisor> d{BDivisor(divisor_of_subspace(a)), BDivisor(divisor_of_subspace(b)), BDivisor(divisor_of_subspace(a))};
    for (auto _ : state)
        benchmark::DoNotOptimize(bdiv_index(d));
}
BENCHMARK(BM_BDivIndex)->Unit(benchmark::kMillisecond);

void BM_SegreSplitting(benchmark::State& state)
{
    const std::vector<unsigned> sig{2, 2, 2};
    for (auto _ : state)
        benchmark::DoNotOptimize(verify_segre_splitting(sig, 0));
}
BENCHMARK(BM_SegreSplitting)->Unit(benchmark::kMillisecond);

} // namespace

BENCHMARK_MAIN();
