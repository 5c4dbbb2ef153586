#include "bvx/bench.hpp"

#include <chrono>
#include <functional>
#include <sstream>

#include "bvx/elementary.hpp"
#include "bvx/error.hpp"
#include "bvx/generators.hpp"
#include "bvx/hardness.hpp"
#include "bvx/proper_interval.hpp"
#include "bvx/tree_solver.hpp"
#include "bvx/treewidth.hpp"

namespace bvx {

namespace {

double time_ms(const std::function<void()>& fn) {
    auto start = std::chrono::steady_clock::now();
    fn();
    auto stop = std::chrono::steady_clock::now();
    return std::chrono::duration<double, std::milli>(stop - start).count();
}

struct LadderCase {
    Graph graph;
    CostVector costs;
    SiteList sites;
};

LadderCase make_case(std::mt19937_64& rng, Graph g, int site_count) {
    int n = g.vertex_count();
    auto costs = random_costs(rng, n, 100);
    auto sites = random_sites(rng, n, site_count);
    return {std::move(g), std::move(costs), std::move(sites)};
}

}  // namespace

std::vector<BenchRow> run_bench(const BenchConfig& config) {
    std::vector<BenchRow> rows;
    std::mt19937_64 rng(config.seed);

    auto run_ladder = [&](const std::string& suite, const std::vector<int>& sizes,
                          const std::function<LadderCase(int)>& gen,
                          const std::function<void(const LadderCase&)>& solve,
                          const std::string& algorithm) {
        for (int n : sizes) {
            LadderCase c = gen(n);
            for (int rep = 0; rep < config.reps; ++rep) {
                double ms = time_ms([&] { solve(c); });
                rows.push_back({suite, algorithm, c.graph.vertex_count(), c.graph.edge_count(),
                                c.sites.size(), rep, ms});
            }
        }
    };
    auto ladder = [&](int lo_exp, int hi_exp) {
        if (config.max_exponent > 0) hi_exp = std::min(hi_exp, config.max_exponent);
        lo_exp = std::min(lo_exp, hi_exp);
        std::vector<int> sizes;
        for (int e = lo_exp; e <= hi_exp; ++e) sizes.push_back(1 << e);
        return sizes;
    };

    for (const auto& suite : config.suites) {
        if (suite == "tree") {
            run_ladder(
                suite, ladder(14, 18),
                [&](int n) { return make_case(rng, random_tree(rng, n), std::max(1, n / 16)); },
                [](const LadderCase& c) { solve_tree(c.graph, c.costs, c.sites); }, "tree");
        } else if (suite == "brute-tree") {
            run_ladder(
                suite, ladder(11, 13),
                [&](int n) { return make_case(rng, random_tree(rng, n), std::max(1, n / 16)); },
                [](const LadderCase& c) { brute_force_balanced_vertex(c.graph, c.costs, c.sites); },
                "brute");
        } else if (suite == "cycle") {
            run_ladder(
                suite, ladder(14, 18),
                [&](int n) { return make_case(rng, make_cycle_graph(n), std::max(1, n / 16)); },
                [](const LadderCase& c) { solve_cycle(c.graph, c.costs, c.sites); }, "cycle");
        } else if (suite == "proper-interval") {
            run_ladder(
                suite, ladder(14, 18),
                [&](int n) {
                    return make_case(rng, random_proper_interval_graph(rng, n, n / 6.0),
                                     std::max(1, n / 16));
                },
                [](const LadderCase& c) { solve_proper_interval(c.graph, c.costs, c.sites); },
                "proper-interval");
        } else if (suite == "partial-ktree") {
            run_ladder(
                suite, {128, 256, 512, 1024},
                [&](int n) {
                    auto [g, td] = random_partial_ktree(rng, n, 3, 0.7);
                    (void)td;
                    return make_case(rng, std::move(g), 3);
                },
                [](const LadderCase& c) {
                    auto td = heuristic_tree_decomposition(c.graph);
                    solve_treewidth(c.graph, td, c.costs, c.sites);
                },
                "treewidth");
        } else if (suite == "hardness") {
            run_ladder(
                suite, {32, 64, 128, 256},
                [&](int n) {
                    auto inst = random_hs_instance(rng, n, 8, 0.3);
                    auto hard = build_hardness_graph(inst);
                    return LadderCase{hard.graph, hard.costs, hard.sites};
                },
                [](const LadderCase& c) {
                    brute_force_balanced_vertex(c.graph, c.costs, c.sites);
                },
                "brute");
        } else {
            throw Error("unknown bench suite '" + suite + "'");
        }
    }
    return rows;
}

std::string bench_to_csv(const std::vector<BenchRow>& rows) {
    std::ostringstream out;
    out << "suite,algorithm,n,m,sites,rep,wall_ms\n";
    for (const auto& r : rows) {
        out << r.suite << "," << r.algorithm << "," << r.n << "," << r.m << "," << r.sites << ","
            << r.rep << "," << r.wall_ms << "\n";
    }
    return out.str();
}

}  // namespace bvx
