#include <benchmark/benchmark.h>

#include "vstring/gauss_diagram.hpp"
#include "vstring/invariant.hpp"
#include "vstring/moves.hpp"
#include "vstring/multistring.hpp"

namespace {

using namespace vstring;

void BM_Phi(benchmark::State& state) {
    const auto d = random_diagram(static_cast<int>(state.range(0)), 17);
    for (auto _ : state) benchmark::DoNotOptimize(phi(d));
    state.SetComplexityN(state.range(0));
}
BENCHMARK(BM_Phi)->RangeMultiplier(2)->Range(2, 32)->Complexity();

void BM_PhiPoly(benchmark::State& state) {
    const auto d = random_diagram(static_cast<int>(state.range(0)), 17);
    for (auto _ : state) benchmark::DoNotOptimize(phi_poly(d));
    state.SetComplexityN(state.range(0));
}
BENCHMARK(BM_PhiPoly)->RangeMultiplier(2)->Range(2, 64)->Complexity();

void BM_Compose(benchmark::State& state) {
    const auto a = phi(random_diagram(static_cast<int>(state.range(0)), 1));
    const auto b = phi(random_diagram(static_cast<int>(state.range(0)), 2));
    for (auto _ : state) benchmark::DoNotOptimize(compose(a, b));
}
BENCHMARK(BM_Compose)->RangeMultiplier(2)->Range(2, 16);

void BM_EnumerateMoves(benchmark::State& state) {
    const auto d = random_diagram(static_cast<int>(state.range(0)), 5);
    for (auto _ : state) benchmark::DoNotOptimize(enumerate_moves(d));
}
BENCHMARK(BM_EnumerateMoves)->RangeMultiplier(2)->Range(2, 16);

void BM_PhiMulti(benchmark::State& state) {
    const auto d = random_colored_diagram(3, static_cast<int>(state.range(0)), 9);
    for (auto _ : state) benchmark::DoNotOptimize(phi_multi(d));
}
BENCHMARK(BM_PhiMulti)->RangeMultiplier(2)->Range(2, 16);

}  // namespace
BENCHMARK_MAIN();
