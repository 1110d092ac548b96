#include <benchmark/benchmark.h>

#include <random>
#include <string>
#include <vector>

#include "sqroot/gadget.hpp"
#include "sqroot/graph.hpp"
#include "sqroot/planarity.hpp"
#include "sqroot/rootsolver.hpp"

using namespace sqroot;

namespace {

Graph random_graph(std::size_t n, double p, std::uint64_t seed)
{
    std::mt19937_64 rng(seed);
    std::bernoulli_distribution coin(p);
    GraphBuilder b;
    for (std::size_t i = 0; i < n; ++i)
        b.add_vertex("v" + std::to_string(i));
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i + 1; j < n; ++j)
            if (coin(rng))
                b.add_edge(i, j);
    return b.build();
}

Graph grid(std::size_t side)
{
    GraphBuilder b;
    for (std::size_t i = 0; i < side * side; ++i)
        b.add_vertex("g" + std::to_string(i));
    for (std::size_t r = 0; r < side; ++r)
        for (std::size_t c = 0; c < side; ++c) {
            if (r + 1 < side)
                b.add_edge(r * side + c, (r + 1) * side + c);
            if (c + 1 < side)
                b.add_edge(r * side + c, r * side + c + 1);
        }
    return b.build();
}

SetSplitInstance chain_instance(std::size_t subsets)
{
    // consecutive triples {e_i, e_i+1, e_i+2}
    std::vector<std::string> ground;
    for (std::size_t i = 0; i < subsets + 2; ++i)
        ground.push_back("e" + std::to_string(i));
    std::vector<std::vector<std::string>> collection;
    for (std::size_t i = 0; i < subsets; ++i)
        collection.push_back({ground[i], ground[i + 1], ground[i + 2]});
    return SetSplitInstance::make(ground, collection);
}

SetSplitInstance four_triples()
{
    return SetSplitInstance::make({"1", "2", "3", "4"},
                                  {{"2", "3", "4"}, {"1", "3", "4"}, {"1", "2", "4"}, {"1", "2", "3"}});
}

} // namespace

static void BM_Square(benchmark::State& state)
{
    const auto g = random_graph(static_cast<std::size_t>(state.range(0)), 8.0 / static_cast<double>(state.range(0)), 1);
    for (auto _ : state)
        benchmark::DoNotOptimize(square(g));
    state.SetComplexityN(state.range(0));
}
BENCHMARK(BM_Square)->RangeMultiplier(2)->Range(64, 2048)->Complexity();

static void BM_IsPlanarGrid(benchmark::State& state)
{
    const auto g = grid(static_cast<std::size_t>(state.range(0)));
    for (auto _ : state)
        benchmark::DoNotOptimize(is_planar(g));
    state.SetComplexityN(state.range(0) * state.range(0));
}
BENCHMARK(BM_IsPlanarGrid)->DenseRange(8, 40, 8)->Complexity();

static void BM_SetsplitToGraph(benchmark::State& state)
{
    const auto inst = chain_instance(static_cast<std::size_t>(state.range(0)));
    for (auto _ : state)
        benchmark::DoNotOptimize(setsplit_to_graph(inst));
}
BENCHMARK(BM_SetsplitToGraph)->Arg(4)->Arg(16)->Arg(64);

static void BM_SolveNoInstance(benchmark::State& state)
{
    const auto g = setsplit_to_graph(four_triples()).graph;
    for (auto _ : state)
        benchmark::DoNotOptimize(solve_square_root(g));
}
BENCHMARK(BM_SolveNoInstance);

static void BM_SolveChainGadget(benchmark::State& state)
{
    const auto g = setsplit_to_graph(chain_instance(static_cast<std::size_t>(state.range(0)))).graph;
    for (auto _ : state)
        benchmark::DoNotOptimize(solve_square_root(g));
}
BENCHMARK(BM_SolveChainGadget)->Arg(2)->Arg(4)->Arg(6);
BENCHMARK_MAIN();
