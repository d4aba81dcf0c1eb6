#include <random>

#include <benchmark/benchmark.h>

#include "cerf/family_one.hpp"

namespace {

// Target reached from the standard system by a fixed run of slides.
cerf::CutSystem scrambled(const cerf::SymplecticLattice& l, int slides) {
    std::mt19937_64 rng(static_cast<unsigned>(slides) * 31 + static_cast<unsigned>(l.genus()));
    auto cs = cerf::standard_cut_system(l);
    const auto g = static_cast<std::size_t>(l.genus());
    for (int s = 0; s < slides && g > 1; ++s) {
        const std::size_t i = rng() % g;
        const std::size_t j = (i + 1 + rng() % (g - 1)) % g;
        cs = cerf::slide(cs, i, j, rng() % 2 ? 1 : -1, l);
    }
    return cs;
}

void BM_InterpolateCutSystems(benchmark::State& state) {
    const cerf::SymplecticLattice l(static_cast<int>(state.range(0)));
    const auto from = cerf::standard_cut_system(l);
    const auto to = scrambled(l, static_cast<int>(state.range(1)));
    for (auto _ : state) benchmark::DoNotOptimize(cerf::interpolate_cut_systems(from, to, l));
}
BENCHMARK(BM_InterpolateCutSystems)->ArgsProduct({{2, 4, 6}, {10, 40}});

void BM_CompileAndAssemble(benchmark::State& state) {
    const int g = static_cast<int>(state.range(0));
    const cerf::SymplecticLattice l(g);
    cerf::TrisectionDiagram t{g, 0, cerf::standard_cut_system(l), {}, {}};
    for (int i = 0; i < g; ++i) {
        t.beta.curves.push_back(l.b(i));
        t.gamma.curves.push_back(l.a(i) + l.b(i));
    }
    for (auto _ : state) {
        const auto gr = cerf::standard_family_from_trisection(t);
        benchmark::DoNotOptimize(cerf::assemble_circle_family(gr, t.alpha));
    }
}
BENCHMARK(BM_CompileAndAssemble)->DenseRange(1, 4);

} // namespace
