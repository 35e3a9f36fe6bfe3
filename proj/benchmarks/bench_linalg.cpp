#include "hochkit/linalg.hpp"

#include <benchmark/benchmark.h>

#include <random>

using namespace hochkit;

namespace {

Mat random_matrix(const ChainRing& R, size_t rows, size_t cols, uint32_t seed) {
    std::mt19937 rng(seed);
    std::uniform_int_distribution<uint64_t> dist(0, R.size() - 1);
    Mat m(R, rows, cols);
    for (Elem& e : m.a) e = R.elem_at(dist(rng));
    return m;
}

void BM_HowellForm(benchmark::State& state) {
    auto R = ChainRing::unramified(2, 3);
    Mat m = random_matrix(R, static_cast<size_t>(state.range(0)), static_cast<size_t>(state.range(0)) * 2, 7);
    for (auto _ : state) benchmark::DoNotOptimize(howell_form(m));
}
BENCHMARK(BM_HowellForm)->Arg(8)->Arg(32)->Arg(64);

void BM_SolveAffine(benchmark::State& state) {
    auto R = ChainRing::unramified(2, 3);
    size_t n = static_cast<size_t>(state.range(0));
    Mat m = random_matrix(R, n, n, 11);
    std::vector<Elem> b(n);
    for (size_t i = 0; i < n; ++i) b[i] = R.from_int(static_cast<int64_t>(i));
    for (auto _ : state) benchmark::DoNotOptimize(solve_affine(m, b));
}
BENCHMARK(BM_SolveAffine)->Arg(16)->Arg(64);

void BM_SmithForm(benchmark::State& state) {
    auto R = ChainRing::eisenstein(2, {-2, 0}, 4);
    size_t n = static_cast<size_t>(state.range(0));
    Mat m = random_matrix(R, n, n, 13);
    for (auto _ : state) benchmark::DoNotOptimize(smith_form(m));
}
BENCHMARK(BM_SmithForm)->Arg(8)->Arg(24);

} // namespace
