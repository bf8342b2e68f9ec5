#include <teamfuse/coverage_sim.hpp>

#include <benchmark/benchmark.h>

using namespace teamfuse;

namespace {

std::vector<RelationGraph> graphs_for(std::size_t n) {
    SimConfig c;
    c.n_robots = n;
    Rng rng(1);
    return build_normalized_graphs(generate_system(c, rng), c.comm_radius);
}

void BM_SolverIterations(benchmark::State& state) {
    const auto graphs = graphs_for(static_cast<std::size_t>(state.range(0)));
    SolverConfig c = SolverConfig::uniform(3);
    c.tolerance = 1e-300;
    c.max_iterations = 10;
    for (auto _ : state) benchmark::DoNotOptimize(solve(graphs, c));
    state.SetComplexityN(state.range(0));
    state.SetItemsProcessed(state.iterations() * c.max_iterations);
}
BENCHMARK(BM_SolverIterations)->RangeMultiplier(2)->Range(16, 256)->Complexity(benchmark::oNCubed);

void BM_Solve(benchmark::State& state) {
    const auto graphs = graphs_for(static_cast<std::size_t>(state.range(0)));
    const SolverConfig c = SolverConfig::uniform(3);
    for (auto _ : state) benchmark::DoNotOptimize(solve(graphs, c));
}
BENCHMARK(BM_Solve)->Arg(10)->Arg(20)->Arg(50)->Unit(benchmark::kMillisecond);

void BM_Partition(benchmark::State& state) {
    const auto graphs = graphs_for(static_cast<std::size_t>(state.range(0)));
    const Eigen::MatrixXd Z = solve(graphs, SolverConfig::uniform(3)).Z;
    for (auto _ : state) benchmark::DoNotOptimize(partition(Z, 10));
    state.SetComplexityN(state.range(0));
}
BENCHMARK(BM_Partition)->RangeMultiplier(2)->Range(16, 128)->Complexity();

void BM_RunTrial(benchmark::State& state) {
    SimConfig c;
    c.n_regions = static_cast<std::size_t>(state.range(0));
    for (auto _ : state) {
        benchmark::DoNotOptimize(run_trial(c));
        ++c.seed;
    }
}
BENCHMARK(BM_RunTrial)->Arg(3)->Arg(10)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
