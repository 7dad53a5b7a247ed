#include <benchmark/benchmark.h>

#include "frontsim/geometry.hpp"
#include "frontsim/kink.hpp"
#include "frontsim/radial.hpp"
#include "frontsim/solver.hpp"

using namespace frontsim;

static void BM_Rhs(benchmark::State& state) {
    const int n = static_cast<int>(state.range(0));
    const GridSpec g(n, n, 0.1, 0.1, -n * 0.05, -n * 0.05);
    const DiffusionMap b(g, std::vector<double>(g.size(), 1.0));
    const BistableParams p(0.3);
    const ScalarField u = front_profile(g, 0.0, p);
    for (auto _ : state) {
        ScalarField du = rhs(u, b, p);
        benchmark::DoNotOptimize(du.data());
    }
    state.SetItemsProcessed(state.iterations() * g.size());
}
BENCHMARK(BM_Rhs)->Arg(128)->Arg(512);

static void BM_Rk4Step(benchmark::State& state) {
    const int n = static_cast<int>(state.range(0));
    const GridSpec g(n, n, 0.1, 0.1, -n * 0.05, -n * 0.05);
    const DiffusionMap b(g, std::vector<double>(g.size(), 1.0));
    const BistableParams p(0.3);
    ScalarField u = front_profile(g, 0.0, p);
    for (auto _ : state) {
        u = rk4_step(u, b, p, 1e-3);
        benchmark::DoNotOptimize(u.data());
    }
    state.SetItemsProcessed(state.iterations() * g.size());
}
BENCHMARK(BM_Rk4Step)->Arg(128)->Arg(512);

static void BM_RasterizeCone(benchmark::State& state) {
    const Scenario s = Scenario::cone(2.0, 0.75);
    for (auto _ : state) {
        DiffusionMap m = rasterize(s);
        benchmark::DoNotOptimize(m.data());
    }
}
BENCHMARK(BM_RasterizeCone);

static void BM_RadialRelax(benchmark::State& state) {
    RadialProblem p;
    for (auto _ : state) {
        RadialSolution sol = relax_solve(p);
        benchmark::DoNotOptimize(sol.u.data());
    }
}
BENCHMARK(BM_RadialRelax);

static void BM_TrappingPosition(benchmark::State& state) {
    const JunctionModel m(4.0, 30.0, 0.3);
    for (auto _ : state) benchmark::DoNotOptimize(trapping_position(m));
}
BENCHMARK(BM_TrappingPosition);

BENCHMARK_MAIN();
