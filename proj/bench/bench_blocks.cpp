// Serial full-complex reference vs. the parallel block engine.

#include <benchmark/benchmark.h>

#include "posetlie/block_engine.hpp"

using namespace posetlie;

namespace {

const char* const kFamilies[] = {"complete-bipartite:2,2", "complete-bipartite:3,2", "diamond:2", "diamond:3",
                                 "chain:5",                "complete-bipartite:3,3", "diamond:4"};

PosetLieAlgebra algebra(int i) {
    const std::string spec = kFamilies[i];
    return PosetLieAlgebra(family_poset(spec), spec.starts_with("chain") ? Mode::Strict : Mode::Reflexive);
}

void BM_reference(benchmark::State& st) {
    const auto g = algebra(int(st.range(0)));
    st.SetLabel(kFamilies[st.range(0)]);
    for (auto _ : st) benchmark::DoNotOptimize(reference_homology(g, Coefficients::integers()));
}

void BM_blocks(benchmark::State& st) {
    const auto g = algebra(int(st.range(0)));
    st.SetLabel(kFamilies[st.range(0)]);
    EngineOptions o;
    o.jobs = int(st.range(1));
    for (auto _ : st) benchmark::DoNotOptimize(block_homology(g, o));
}

void BM_blocks_pruned(benchmark::State& st) {
    const auto g = algebra(int(st.range(0)));
    st.SetLabel(kFamilies[st.range(0)]);
    EngineOptions o;
    o.prune = g.mode() == Mode::Reflexive;
    for (auto _ : st) benchmark::DoNotOptimize(block_homology(g, o));
}

}  // namespace

BENCHMARK(BM_reference)->DenseRange(0, 6)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_blocks)->ArgsProduct({{0, 1, 2, 3, 4, 5, 6}, {1, 0}})->Unit(benchmark::kMillisecond);
BENCHMARK(BM_blocks_pruned)->DenseRange(0, 6)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
