#include <benchmark/benchmark.h>

#include "lced/arboricity.hpp"
#include "lced/campaign.hpp"
#include "lced/decomposition.hpp"
#include "lced/fixtures.hpp"
#include "lced/matching_sequence.hpp"
#include "lced/moving_cut.hpp"
#include "lced/rng.hpp"

namespace {

using namespace lced;

void BM_GenerateParallelGreedy(benchmark::State& state) {
    int n = static_cast<int>(state.range(0));
    std::uint64_t seed = 7;
    for (auto _ : state) {
        MatchingSequence seq = generate_parallel_greedy(n, 8, 12, seed++);
        benchmark::DoNotOptimize(seq.edge_count());
    }
}
BENCHMARK(BM_GenerateParallelGreedy)->Arg(50)->Arg(200);

void BM_VerifyParallelGreedy(benchmark::State& state) {
    MatchingSequence seq = generate_parallel_greedy(static_cast<int>(state.range(0)), 8, 12, 7);
    for (auto _ : state) {
        benchmark::DoNotOptimize(verify_parallel_greedy(seq, 8).ok);
    }
}
BENCHMARK(BM_VerifyParallelGreedy)->Arg(50)->Arg(200);

void BM_MonotonicPaths(benchmark::State& state) {
    MatchingSequence seq = generate_parallel_greedy(static_cast<int>(state.range(0)), 8, 12, 7);
    for (auto _ : state) {
        auto counts = enumerate_monotonic_paths(seq, 4);
        benchmark::DoNotOptimize(counts.size());
    }
}
BENCHMARK(BM_MonotonicPaths)->Arg(50)->Arg(200);

void BM_RationalDistances(benchmark::State& state) {
    Rng rng(11);
    LengthCapGraph g = random_length_graph(rng, 7, 7);
    for (auto _ : state) {
        for (int v = 0; v < g.vertex_count(); ++v) {
            benchmark::DoNotOptimize(g.distances_from(v).size());
        }
    }
}
BENCHMARK(BM_RationalDistances);

void BM_DemandSizeFlow(benchmark::State& state) {
    LengthCapGraph g = fixture_graph("dumbbell");
    NodeWeighting a = g.degree_weighting();
    MovingCut cut;
    cut.set(6, Rat(1));
    for (auto _ : state) {
        benchmark::DoNotOptimize(demand_size(g, cut, a, Rat(5), Rat(2)).value);
    }
}
BENCHMARK(BM_DemandSizeFlow);

void BM_ArboricityExact(benchmark::State& state) {
    MatchingSequence seq = generate_parallel_greedy(static_cast<int>(state.range(0)), 6, 10, 7);
    SimpleGraph g = union_graph(seq);
    for (auto _ : state) {
        benchmark::DoNotOptimize(arboricity_exact(g));
    }
}
BENCHMARK(BM_ArboricityExact)->Arg(64)->Arg(128);

void BM_BuildDecomposition(benchmark::State& state) {
    LengthCapGraph g = fixture_graph("dumbbell");
    NodeWeighting a = g.degree_weighting();
    FinderSpec spec{FinderFamily::Exhaustive, 3, 200'000};
    for (auto _ : state) {
        auto result = build_decomposition(g, a, Rat(5), Rat(2), Rat(1, 6), spec);
        benchmark::DoNotOptimize(result.cuts.size());
    }
}
BENCHMARK(BM_BuildDecomposition);

}  // namespace

BENCHMARK_MAIN();
