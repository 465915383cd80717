#include <benchmark/benchmark.h>

#include "sqfactor/corpus.hpp"
#include "sqfactor/counterexample.hpp"
#include "sqfactor/factor_builder.hpp"
#include "sqfactor/factor_search.hpp"
#include "sqfactor/graph.hpp"
#include "sqfactor/ham_engine.hpp"
#include "sqfactor/structure.hpp"

using namespace sqfactor;

namespace {

Graph block_tree(std::size_t n) {
    corpus::Rng rng(corpus::kDefaultSeed);
    return corpus::random_block_tree(rng, n);
}

void BM_Square(benchmark::State& state) {
    const Graph g = block_tree(static_cast<std::size_t>(state.range(0)));
    for (auto _ : state) {
        benchmark::DoNotOptimize(square(g));
    }
    state.SetComplexityN(state.range(0));
}
BENCHMARK(BM_Square)->RangeMultiplier(4)->Range(16, 4096)->Complexity();

void BM_Decompose(benchmark::State& state) {
    const Graph g = block_tree(static_cast<std::size_t>(state.range(0)));
    for (auto _ : state) {
        benchmark::DoNotOptimize(classify(g, decompose(g)));
    }
    state.SetComplexityN(state.range(0));
}
BENCHMARK(BM_Decompose)->RangeMultiplier(4)->Range(16, 4096)->Complexity();

void BM_ConstrainedCycle(benchmark::State& state) {
    corpus::Rng rng(corpus::kDefaultSeed);
    const auto n = static_cast<std::size_t>(state.range(0));
    const Graph g = corpus::random_biconnected(rng, n, n / 3);
    for (auto _ : state) {
        benchmark::DoNotOptimize(constrained_hamiltonian_cycle(g, 0, 1));
    }
}
BENCHMARK(BM_ConstrainedCycle)->DenseRange(8, 20, 4);

void BM_LemmaFactor(benchmark::State& state) {
    corpus::Rng rng(corpus::kDefaultSeed);
    const Graph g = corpus::random_lemma_graph(rng, static_cast<std::size_t>(state.range(0)));
    for (auto _ : state) {
        benchmark::DoNotOptimize(lemma_factor(g));
    }
    state.counters["n"] = static_cast<double>(g.vertex_count());
}
BENCHMARK(BM_LemmaFactor)->Arg(20)->Arg(40);

void BM_BuildFactor(benchmark::State& state) {
    corpus::Rng rng(corpus::kDefaultSeed);
    const Graph g = corpus::random_theorem_graph(rng, static_cast<std::size_t>(state.range(0)));
    for (auto _ : state) {
        benchmark::DoNotOptimize(build_factor(g));
    }
    state.counters["n"] = static_cast<double>(g.vertex_count());
}
BENCHMARK(BM_BuildFactor)->Arg(20)->Arg(40);

void BM_FamilySearch(benchmark::State& state) {
    const auto [g, d] = gen_counterexample(1, triangle_attachment(), triangle_attachment());
    for (auto _ : state) {
        benchmark::DoNotOptimize(exists_factor(g, 1));
    }
}
BENCHMARK(BM_FamilySearch)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
