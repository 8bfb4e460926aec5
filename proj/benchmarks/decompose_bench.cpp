#include <benchmark/benchmark.h>

#include "monointerp/diagram.hpp"
#include "monointerp/objects.hpp"
#include "monointerp/oracle.hpp"
#include "monointerp/slopes.hpp"

namespace {

using namespace monointerp;

const BlockDiagram& degree48()
{
    static const BlockDiagram d = parse_ideal("x^9,x^7y^2,x^6y^4,x^4y^5,x^3y^6,y^8");
    return d;
}

void BM_SchemeSlope(benchmark::State& state)
{
    for (auto _ : state) {
        benchmark::DoNotOptimize(scheme_slope(degree48()));
    }
}
BENCHMARK(BM_SchemeSlope);

void BM_DecomposeDegree48(benchmark::State& state)
{
    for (auto _ : state) {
        auto tree = decompose(RankOne{degree48(), 0});
        benchmark::DoNotOptimize(tree.node_count());
    }
}
BENCHMARK(BM_DecomposeDegree48);

void BM_DecomposeAllOfDegree(benchmark::State& state)
{
    const auto diagrams = enumerate_diagrams(static_cast<int>(state.range(0)));
    for (auto _ : state) {
        std::size_t nodes = 0;
        for (const auto& d : diagrams) {
            nodes += decompose(RankOne{d, 0}).node_count();
        }
        benchmark::DoNotOptimize(nodes);
    }
    state.SetItemsProcessed(state.iterations() * static_cast<long>(diagrams.size()));
}
BENCHMARK(BM_DecomposeAllOfDegree)->Arg(8)->Arg(12)->Arg(16);

void BM_EnumerateDiagrams(benchmark::State& state)
{
    for (auto _ : state) {
        benchmark::DoNotOptimize(enumerate_diagrams(static_cast<int>(state.range(0))).size());
    }
}
BENCHMARK(BM_EnumerateDiagrams)->Arg(18)->Arg(30);

void BM_VerifyNesting(benchmark::State& state)
{
    for (auto _ : state) {
        benchmark::DoNotOptimize(verify_nesting(static_cast<int>(state.range(0))).failure_count);
    }
}
BENCHMARK(BM_VerifyNesting)->Arg(10)->Unit(benchmark::kMillisecond);

} // namespace

BENCHMARK_MAIN();
