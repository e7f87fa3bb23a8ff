#include <benchmark/benchmark.h>

#include <random>

#include "morava/graded_action.hpp"
#include "morava/linalg.hpp"
#include "morava/matrix_groups.hpp"

using namespace morava;

namespace {

FpMatrix random_matrix(std::size_t n, unsigned p, unsigned seed)
{
    std::mt19937 rng(seed);
    std::uniform_int_distribution<int> dist(0, int(p) - 1);
    FpMatrix m(n, n, p);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            m.set(i, j, dist(rng));
    return m;
}

// The action of A on K^1_{2,3} for p = 5 (dimension 651).
const FpMatrix& piece_matrix_p5()
{
    static const FpMatrix m = [] {
        AlgebraContext ctx(5, 2, 3);
        return build_graded_action(ctx, preset(5, 3, "UV").generators, 1, Variant::K, false).matrices[0];
    }();
    return m;
}

void BM_RankReference(benchmark::State& state)
{
    const auto m = random_matrix(std::size_t(state.range(0)), unsigned(state.range(1)), 1);
    for (auto _ : state)
        benchmark::DoNotOptimize(reference::rank(m));
}

void BM_RankParallel(benchmark::State& state)
{
    const auto m = random_matrix(std::size_t(state.range(0)), unsigned(state.range(1)), 1);
    for (auto _ : state)
        benchmark::DoNotOptimize(rank(m));
}

void BM_MultiplyReference(benchmark::State& state)
{
    const auto a = random_matrix(std::size_t(state.range(0)), unsigned(state.range(1)), 2);
    const auto b = random_matrix(std::size_t(state.range(0)), unsigned(state.range(1)), 3);
    for (auto _ : state)
        benchmark::DoNotOptimize(reference::multiply(a, b));
}

void BM_MultiplyParallel(benchmark::State& state)
{
    const auto a = random_matrix(std::size_t(state.range(0)), unsigned(state.range(1)), 2);
    const auto b = random_matrix(std::size_t(state.range(0)), unsigned(state.range(1)), 3);
    for (auto _ : state)
        benchmark::DoNotOptimize(a * b);
}

void BM_PieceRankReference(benchmark::State& state)
{
    const FpMatrix m = piece_matrix_p5() - FpMatrix::identity(piece_matrix_p5().rows(), 5);
    for (auto _ : state)
        benchmark::DoNotOptimize(reference::rank(m));
}

void BM_PieceRankParallel(benchmark::State& state)
{
    const FpMatrix m = piece_matrix_p5() - FpMatrix::identity(piece_matrix_p5().rows(), 5);
    for (auto _ : state)
        benchmark::DoNotOptimize(rank(m));
}

void sizes(benchmark::internal::Benchmark* b)
{
    for (int p : {2, 3, 5})
        for (int n : {64, 256, 512})
            b->Args({n, p});
}

}  // namespace

BENCHMARK(BM_RankReference)->Apply(sizes)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_RankParallel)->Apply(sizes)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_MultiplyReference)->Apply(sizes)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_MultiplyParallel)->Apply(sizes)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_PieceRankReference)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_PieceRankParallel)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
