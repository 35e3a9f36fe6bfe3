#include "hochkit/derivlift.hpp"
#include "hochkit/morita.hpp"

#include <benchmark/benchmark.h>

using namespace hochkit;

namespace {

void BM_HH2_TruncatedPoly(benchmark::State& state) {
    auto R = ChainRing::unramified(2, 2);
    Algebra a = Algebra::truncated_polynomial(R, static_cast<int>(state.range(0)));
    Bimodule reg = regular_bimodule(a);
    for (auto _ : state) benchmark::DoNotOptimize(cohomology(a, reg, 2));
}
BENCHMARK(BM_HH2_TruncatedPoly)->Arg(2)->Arg(4);

void BM_HH1_MatrixAlgebra(benchmark::State& state) {
    auto R = ChainRing::unramified(2, 1);
    Algebra a = Algebra::matrix_algebra(Algebra::truncated_polynomial(R, 2), 2);
    Bimodule reg = regular_bimodule(a);
    for (auto _ : state) benchmark::DoNotOptimize(cohomology(a, reg, 1));
}
BENCHMARK(BM_HH1_MatrixAlgebra);

void BM_IntegrableChain(benchmark::State& state) {
    auto R = ChainRing::unramified(2, 4);
    Algebra a = Algebra::truncated_polynomial(R, 2);
    for (auto _ : state) benchmark::DoNotOptimize(integrable_chain(a, 1, 4));
}
BENCHMARK(BM_IntegrableChain);

void BM_LesReport(benchmark::State& state) {
    auto R = ChainRing::unramified(2, 2);
    Algebra a = Algebra::cyclic_group(R, 2);
    for (auto _ : state) benchmark::DoNotOptimize(les_exactness_report(a, 1, 2));
}
BENCHMARK(BM_LesReport);

void BM_MoritaReport(benchmark::State& state) {
    auto R = ChainRing::unramified(2, 3);
    Algebra a = Algebra::truncated_polynomial(R, 2);
    for (auto _ : state) benchmark::DoNotOptimize(morita_invariance_report(a, 1, 3, 2));
}
BENCHMARK(BM_MoritaReport);

} // namespace
