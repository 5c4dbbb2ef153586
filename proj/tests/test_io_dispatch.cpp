#include <doctest.h>

#include <random>

#include "bvx/bench.hpp"
#include "bvx/dispatch.hpp"
#include "bvx/elementary.hpp"
#include "bvx/error.hpp"
#include "bvx/generators.hpp"
#include "bvx/hardness.hpp"
#include "bvx/io.hpp"
#include "bvx/proper_interval.hpp"
#include "test_support.hpp"

using namespace bvx;
namespace bt = bvx::testing;

TEST_CASE("minimal instance file") {
    auto inst = parse_instance_text("p 2 1\ne 0 1\ns 0\n");
    CHECK(inst.graph.vertex_count() == 2);
    CHECK(inst.costs.at(0) == kFixedOne);  // default cost 1
    CHECK(inst.sites.size() == 1);
}

TEST_CASE("parse errors carry line numbers") {
    CHECK_THROWS_WITH_AS(parse_instance_text("p 2 1\ne 0 1\ns 0 0\n"),
                         "duplicate site 0; sites must be pairwise different vertices", Error);
    CHECK_THROWS_WITH_AS(parse_instance_text("p 2 1\ne 0 1\nc 1 -3\ns 0\n"),
                         "line 3: negative cost: '-3'", Error);
    CHECK_THROWS_WITH_AS(parse_instance_text("p 2 1\ne 0 x\ns 0\n"),
                         "line 2: malformed integer 'x'", Error);
    CHECK_THROWS_AS(parse_instance_text("p 3 2\ne 0 1\ns 0\n"), Error);   // edge count
    CHECK_THROWS_AS(parse_instance_text("p 3 1\ne 0 1\ns 0\n"), Error);   // disconnected
    CHECK_THROWS_AS(parse_instance_text("p 2 1\ne 0 1\n"), Error);        // no sites
}

TEST_CASE("comments, costs, labels and weights parse") {
    auto inst = parse_instance_text(
        "# a weighted triangle\n"
        "p 3 3\n"
        "e 0 1 2\ne 1 2\ne 0 2 5\n"
        "c 0 1.5 first\nc 1 0.25\n"
        "s 2 0\n");
    CHECK(inst.graph.weighted());
    CHECK(inst.costs.at(0) == 1'500'000);
    CHECK(inst.costs.at(1) == 250'000);
    CHECK(inst.costs.at(2) == kFixedOne);
    CHECK(inst.labels[0] == "first");
    CHECK(inst.sites.at(0) == 2);
}

TEST_CASE("instance text round trips") {
    std::mt19937_64 rng(199);
    auto g = random_connected_graph(rng, 15, 10);
    auto costs = random_costs(rng, 15, 9);
    auto s = random_sites(rng, 15, 4);
    auto text = instance_to_text(g, costs, s);
    auto back = parse_instance_text(text);
    CHECK(back.graph.edges() == g.edges());
    CHECK(back.sites.vertices() == s.vertices());
    for (Vertex v = 0; v < 15; ++v) CHECK(back.costs.at(v) == costs.at(v));
}

TEST_CASE("tree decomposition text round trips") {
    auto g = make_cycle_graph(5);
    auto td = heuristic_tree_decomposition(g);
    auto text = tree_decomposition_to_text(td, 5);
    auto back = parse_tree_decomposition_text(text, 5);
    CHECK(validate_tree_decomposition(g, back) == validate_tree_decomposition(g, td));
    CHECK_THROWS_AS(parse_tree_decomposition_text("b 1 0\n", 5), Error);
}

TEST_CASE("auto dispatch picks the matching class") {
    std::mt19937_64 rng(211);
    auto costs8 = random_costs(rng, 8, 9);
    auto sites8 = random_sites(rng, 8, 2);

    auto check_class = [&](Graph g, const std::string& expect) {
        ProblemInstance inst{std::move(g), costs8, sites8, std::nullopt, {}};
        auto outcome = solve_instance(inst);
        CHECK(outcome.algorithm == expect);
        CHECK(outcome.certified);
        auto slow = brute_force_balanced_vertex(inst.graph, inst.costs, inst.sites);
        CHECK(outcome.result.best_load == slow.best_load);
    };
    check_class(make_complete_graph(8), "clique");
    check_class(make_path_graph(8), "path");
    check_class(make_cycle_graph(8), "cycle");
    check_class(make_star_graph(8), "tree");
    check_class(random_proper_interval_graph(rng, 8, 2.0), "proper-interval");
}

TEST_CASE("diameter-two detection and the budget policy") {
    std::mt19937_64 rng(223);
    // A diameter-2 graph that is neither complete nor proper interval:
    // two hubs covering everything, plus a far pair.
    auto g = Graph::from_edges(6, {{0, 2}, {0, 3}, {1, 2}, {1, 3}, {2, 3}, {2, 4}, {3, 5},
                                   {0, 4}, {1, 4}, {0, 5}, {1, 5}});
    REQUIRE(has_diameter_at_most_two(g));
    ProblemInstance inst{g, random_costs(rng, 6, 9), random_sites(rng, 6, 2), std::nullopt, {}};
    if (!is_complete(inst.graph)) {
        SolveOptions options;
        auto outcome = solve_instance(inst, options);
        CHECK(outcome.certified);

        // With a tiny budget and no assumption, the explicit request fails.
        options.algorithm = Algorithm::DiameterTwo;
        options.diameter_check_budget = 1;
        CHECK_THROWS_AS(solve_instance(inst, options), PreconditionError);
        options.assume_diameter_two = true;
        CHECK(solve_instance(inst, options).certified);
    }
}

TEST_CASE("explicit class requests are verified") {
    std::mt19937_64 rng(227);
    ProblemInstance inst{make_path_graph(6), random_costs(rng, 6, 5), random_sites(rng, 6, 2),
                         std::nullopt, {}};
    SolveOptions options;
    options.algorithm = Algorithm::Clique;
    CHECK_THROWS_AS(solve_instance(inst, options), PreconditionError);
    options.algorithm = Algorithm::Path;
    CHECK(solve_instance(inst, options).certified);
}

TEST_CASE("tree instances solved through the treewidth route agree") {
    std::mt19937_64 rng(229);
    auto g = random_tree(rng, 24);
    ProblemInstance inst{g, random_costs(rng, 24, 9), random_sites(rng, 24, 3), std::nullopt, {}};
    SolveOptions options;
    options.algorithm = Algorithm::Treewidth;
    auto via_tw = solve_instance(inst, options);
    options.algorithm = Algorithm::Tree;
    auto via_tree = solve_instance(inst, options);
    CHECK(via_tw.result.best_load == via_tree.result.best_load);
    CHECK(via_tw.result.best_vertex == via_tree.result.best_vertex);
}

TEST_CASE("fallback to brute force on a dense unstructured graph") {
    std::mt19937_64 rng(233);
    // Random dense-ish graph with diameter 3+: none of the special classes.
    Graph g = [&] {
        while (true) {
            auto candidate = random_connected_graph(rng, 30, 60);
            if (!is_complete(candidate) && !has_diameter_at_most_two(candidate)) {
                try {
                    (void)solve_proper_interval(candidate, CostVector::uniform(30, kFixedOne),
                                                bt::sites_of({0}, 30));
                } catch (const PreconditionError&) {
                    return candidate;
                }
            }
        }
    }();
    ProblemInstance inst{g, random_costs(rng, 30, 9), random_sites(rng, 30, 3), std::nullopt, {}};
    auto outcome = solve_instance(inst);
    CHECK((outcome.algorithm == "treewidth" || outcome.algorithm == "brute"));
    auto slow = brute_force_balanced_vertex(inst.graph, inst.costs, inst.sites);
    CHECK(outcome.result.best_load == slow.best_load);
}

TEST_CASE("weighted instances bypass the unit-distance solvers") {
    std::mt19937_64 rng(251);
    // A weighted triangle is complete, but the clique closed form assumes
    // hop distances; the dispatcher must not use it.
    auto g = Graph::from_weighted_edges(4, {{0, 1}, {1, 2}, {2, 3}, {0, 3}, {0, 2}, {1, 3}},
                                        {5, 1, 1, 1, 1, 9});
    ProblemInstance inst{g, random_costs(rng, 4, 9), bt::sites_of({0}, 4), std::nullopt, {}};
    auto outcome = solve_instance(inst);
    CHECK((outcome.algorithm == "treewidth" || outcome.algorithm == "brute"));
    auto slow = brute_force_balanced_vertex(inst.graph, inst.costs, inst.sites);
    CHECK(outcome.result.best_load == slow.best_load);
    CHECK_THROWS_AS(solve_clique(g, inst.costs, inst.sites), PreconditionError);

    // Weighted treewidth route agrees with brute force.
    SolveOptions options;
    options.algorithm = Algorithm::Treewidth;
    CHECK(solve_instance(inst, options).result.best_load == slow.best_load);
}

TEST_CASE("json rendering carries the schema fields") {
    std::mt19937_64 rng(239);
    ProblemInstance inst{make_path_graph(5), bt::costs_of({1, 2, 3, 4, 5}),
                         bt::sites_of({2}, 5), std::nullopt, {}};
    auto outcome = solve_instance(inst);
    auto json = solve_outcome_to_json(outcome);
    for (const char* key : {"best_vertex", "best_load", "site_loads", "certified", "algorithm",
                            "wall_ms"}) {
        INFO(key);
        CHECK(json.find(key) != std::string::npos);
    }
    auto diagram = prioritized_voronoi(inst.graph, inst.costs, inst.sites);
    auto vjson = voronoi_to_json(inst.graph, inst.sites, diagram);
    CHECK(vjson.find("owner_site") != std::string::npos);
    CHECK(vjson.find("max_load") != std::string::npos);
}

TEST_CASE("hardness graphs survive an emit-parse-solve cycle") {
    std::mt19937_64 rng(241);
    auto hs = random_hs_instance(rng, 3, 3, 0.5);
    auto hard = build_hardness_graph(hs);
    auto text = instance_to_text(hard.graph, hard.costs, hard.sites, hard.labels);
    auto inst = parse_instance_text(text);
    CHECK(inst.graph.vertex_count() == hard.graph.vertex_count());
    CHECK(inst.labels == hard.labels);
    auto direct = brute_force_balanced_vertex(hard.graph, hard.costs, hard.sites);
    auto reparsed = brute_force_balanced_vertex(inst.graph, inst.costs, inst.sites);
    CHECK(direct.best_load == reparsed.best_load);
}

TEST_CASE("empty bench suite gives an empty report") {
    BenchConfig config;
    auto rows = run_bench(config);
    CHECK(rows.empty());
    CHECK(bench_to_csv(rows) == "suite,algorithm,n,m,sites,rep,wall_ms\n");
}

TEST_CASE("bench ladders produce rows") {
    BenchConfig config;
    config.suites = {"cycle"};
    config.reps = 1;
    config.max_exponent = 8;
    auto rows = run_bench(config);
    CHECK(!rows.empty());
    for (const auto& r : rows) {
        CHECK(r.suite == "cycle");
        CHECK(r.wall_ms >= 0.0);
    }
    config.suites = {"nope"};
    CHECK_THROWS_AS(run_bench(config), Error);
}
