#include <benchmark/benchmark.h>

#include <random>

#include "bvx/elementary.hpp"
#include "bvx/generators.hpp"
#include "bvx/proper_interval.hpp"
#include "bvx/tree_solver.hpp"
#include "bvx/voronoi.hpp"

namespace {

struct Case {
    bvx::Graph graph;
    bvx::CostVector costs;
    bvx::SiteList sites;
};

Case tree_case(int n) {
    std::mt19937_64 rng(7);
    auto g = bvx::random_tree(rng, n);
    auto costs = bvx::random_costs(rng, n, 100);
    auto sites = bvx::random_sites(rng, n, std::max(1, n / 16));
    return {std::move(g), std::move(costs), std::move(sites)};
}

Case interval_case(int n) {
    std::mt19937_64 rng(11);
    auto g = bvx::random_proper_interval_graph(rng, n, n / 6.0);
    auto costs = bvx::random_costs(rng, n, 100);
    auto sites = bvx::random_sites(rng, n, std::max(1, n / 16));
    return {std::move(g), std::move(costs), std::move(sites)};
}

void BM_PrioritizedVoronoi(benchmark::State& state) {
    auto c = tree_case(static_cast<int>(state.range(0)));
    for (auto _ : state) {
        benchmark::DoNotOptimize(bvx::prioritized_voronoi(c.graph, c.costs, c.sites));
    }
}
BENCHMARK(BM_PrioritizedVoronoi)->Arg(1 << 14)->Arg(1 << 16)->Arg(1 << 18);

void BM_SolveTree(benchmark::State& state) {
    auto c = tree_case(static_cast<int>(state.range(0)));
    for (auto _ : state) {
        benchmark::DoNotOptimize(bvx::solve_tree(c.graph, c.costs, c.sites));
    }
}
BENCHMARK(BM_SolveTree)->Arg(1 << 14)->Arg(1 << 16)->Arg(1 << 18)->Unit(benchmark::kMillisecond);

void BM_SolveProperInterval(benchmark::State& state) {
    auto c = interval_case(static_cast<int>(state.range(0)));
    for (auto _ : state) {
        benchmark::DoNotOptimize(bvx::solve_proper_interval(c.graph, c.costs, c.sites));
    }
}
BENCHMARK(BM_SolveProperInterval)
    ->Arg(1 << 14)
    ->Arg(1 << 16)
    ->Arg(1 << 18)
    ->Unit(benchmark::kMillisecond);

void BM_BruteForce(benchmark::State& state) {
    auto c = tree_case(static_cast<int>(state.range(0)));
    for (auto _ : state) {
        benchmark::DoNotOptimize(bvx::brute_force_balanced_vertex(c.graph, c.costs, c.sites));
    }
}
BENCHMARK(BM_BruteForce)->Arg(1 << 10)->Arg(1 << 12)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
