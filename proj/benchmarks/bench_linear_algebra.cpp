#include <random>

#include <benchmark/benchmark.h>

#include "cerf/integer_matrix.hpp"
#include "cerf/invariants.hpp"

namespace {

cerf::IntMatrix random_matrix(std::size_t n, std::mt19937_64& rng) {
    std::vector<std::vector<cerf::Integer>> rows(n, std::vector<cerf::Integer>(n));
    std::uniform_int_distribution<int> d(-9, 9);
    for (auto& r : rows)
        for (auto& x : r) x = d(rng);
    return cerf::IntMatrix::from_rows(rows, n);
}

void BM_SmithNormalForm(benchmark::State& state) {
    std::mt19937_64 rng(7);
    const auto m = random_matrix(static_cast<std::size_t>(state.range(0)), rng);
    for (auto _ : state) benchmark::DoNotOptimize(cerf::smith_normal_form(m));
}
BENCHMARK(BM_SmithNormalForm)->DenseRange(2, 6, 2);

void BM_HermiteNormalForm(benchmark::State& state) {
    std::mt19937_64 rng(8);
    const auto m = random_matrix(static_cast<std::size_t>(state.range(0)), rng);
    for (auto _ : state) benchmark::DoNotOptimize(cerf::hermite_normal_form(m));
}
BENCHMARK(BM_HermiteNormalForm)->DenseRange(2, 8, 2);

void BM_WallSignature(benchmark::State& state) {
    const int g = static_cast<int>(state.range(0));
    const cerf::SymplecticLattice l(g);
    cerf::IntMatrix a(g, l.rank()), b(g, l.rank()), c(g, l.rank());
    for (int i = 0; i < g; ++i) {
        a(i, 2 * i) = 1;
        b(i, 2 * i + 1) = 1;
        c(i, 2 * i) = 1;
        c(i, 2 * i + 1) = 1;
    }
    for (auto _ : state) benchmark::DoNotOptimize(cerf::wall_signature(a, b, c, l));
}
BENCHMARK(BM_WallSignature)->DenseRange(1, 5);

} // namespace
