#include <benchmark/benchmark.h>

#include "cerf/family_two.hpp"
#include "cerf/ribbon.hpp"

namespace {

void BM_RibbonCensus(benchmark::State& state) {
    const int vertices = static_cast<int>(state.range(0));
    for (auto _ : state) benchmark::DoNotOptimize(cerf::ribbon_census(vertices));
}
BENCHMARK(BM_RibbonCensus)->DenseRange(1, 3)->Unit(benchmark::kMillisecond);

void BM_CanonicalCode(benchmark::State& state) {
    const auto census = cerf::ribbon_census(3);
    for (auto _ : state)
        for (const auto& e : census) benchmark::DoNotOptimize(cerf::canonical_code(e.neighborhood));
}
BENCHMARK(BM_CanonicalCode)->Unit(benchmark::kMicrosecond);

void BM_PermutahedronScan(benchmark::State& state) {
    const auto& census = cerf::triple_census();
    const auto orders = cerf::height_assignments();
    for (auto _ : state)
        for (const auto& e : census)
            for (const auto& labels : orders) benchmark::DoNotOptimize(cerf::permutahedron_edge_types(e.neighborhood, labels));
}
BENCHMARK(BM_PermutahedronScan)->Unit(benchmark::kMicrosecond);

} // namespace
