#include <doctest.h>

#include <random>

#include "bvx/elementary.hpp"
#include "bvx/error.hpp"
#include "bvx/generators.hpp"
#include "test_support.hpp"

using namespace bvx;
namespace bt = bvx::testing;

namespace {

void check_against_brute(const Graph& g, const CostVector& costs, const SiteList& s,
                         SolveResult (*solver)(const Graph&, const CostVector&, const SiteList&)) {
    auto fast = solver(g, costs, s);
    auto slow = brute_force_balanced_vertex(g, costs, s);
    CHECK(fast.best_load == slow.best_load);
    CHECK(witness_load(g, costs, s, fast.best_vertex).max_load == fast.best_load);
}

}  // namespace

TEST_CASE("clique solver closed form") {
    auto k4 = make_complete_graph(4);
    auto r = solve_clique(k4, bt::costs_of({5, 1, 2, 3}), bt::sites_of({0}, 4));
    CHECK(r.best_vertex == 3);
    CHECK(r.best_load == bt::scaled(8));

    auto k3 = make_complete_graph(3);
    auto r3 = solve_clique(k3, bt::costs_of({1, 1, 1}), bt::sites_of({0}, 3));
    CHECK(r3.best_load == bt::scaled(2));
    CHECK(r3.best_vertex == 1);  // tie-break

    auto k2 = make_complete_graph(2);
    auto r2 = solve_clique(k2, bt::costs_of({7, 4}), bt::sites_of({0}, 2));
    CHECK(r2.best_vertex == 1);
    CHECK(r2.best_load == bt::scaled(7));

    CHECK_THROWS_AS(solve_clique(make_path_graph(3), bt::costs_of({1, 1, 1}),
                                 bt::sites_of({0}, 3)),
                    PreconditionError);
}

TEST_CASE("diameter-two solver on a four-cycle") {
    auto c4 = make_cycle_graph(4);
    auto r = solve_diameter_two(c4, bt::costs_of({1, 2, 3, 4}), bt::sites_of({0}, 4));
    CHECK(r.best_vertex == 1);
    CHECK(r.best_load == bt::scaled(5));
}

TEST_CASE("diameter-two solver agrees with the clique solver on cliques") {
    std::mt19937_64 rng(31);
    for (int round = 0; round < 25; ++round) {
        int n = 2 + static_cast<int>(rng() % 12);
        auto g = make_complete_graph(n);
        auto costs = random_costs(rng, n, 20);
        auto s = random_sites(rng, n, 1 + static_cast<int>(rng() % (n - 1)));
        CHECK(solve_diameter_two(g, costs, s).best_load == solve_clique(g, costs, s).best_load);
    }
}

TEST_CASE("diameter-two solver with one candidate left") {
    auto g = make_star_graph(5);
    auto costs = bt::costs_of({1, 2, 3, 4, 5});
    auto s = bt::sites_of({0, 1, 2, 4}, 5);
    auto r = solve_diameter_two(g, costs, s);
    CHECK(r.best_vertex == 3);
    CHECK(r.best_load == witness_load(g, costs, s, 3).max_load);
}

TEST_CASE("path decomposition reproduces the 13-node reference prefix sums") {
    auto g = make_path_graph(13);
    auto costs = bt::costs_of({1, 19, 3, 5, 1, 1, 0, 2, 1, 1, 1, 4, 10});
    auto s = bt::sites_of({4, 12, 7}, 13);
    auto decomp = build_path_decomposition(g, costs, s);
    REQUIRE(decomp.components.size() == 3);

    // Per stretch, the prefix sums at the free positions.
    auto free_prefix = [&](const PathComponent& comp) {
        std::vector<long long> out;
        for (std::size_t j = 0; j < comp.nodes.size(); ++j) {
            if ((j == 0 && comp.first_is_site) ||
                (j + 1 == comp.nodes.size() && comp.last_is_site)) {
                continue;
            }
            out.push_back(comp.prefix[j] / kFixedOne);
        }
        return out;
    };
    CHECK(free_prefix(decomp.components[0]) == std::vector<long long>{1, 20, 23, 28});
    CHECK(free_prefix(decomp.components[1]) == std::vector<long long>{2, 2});
    CHECK(free_prefix(decomp.components[2]) == std::vector<long long>{3, 4, 5, 9});

    CHECK(decomp.components[0].outside_cap == bt::scaled(15));  // far sites: 15 and 4
    CHECK(decomp.components[1].left_owned_limit == 1);
    CHECK(decomp.components[2].left_owned_limit == 2);

    // And the solver matches brute force on the same instance.
    check_against_brute(g, costs, s, solve_path);
    auto r = solve_path(g, costs, s);
    CHECK(r.best_vertex == 0);
    CHECK(r.best_load == bt::scaled(20));
}

TEST_CASE("path solver simple cases") {
    auto g5 = make_path_graph(5);
    check_against_brute(g5, CostVector::uniform(5, kFixedOne), bt::sites_of({0}, 5), solve_path);

    auto g2 = make_path_graph(2);
    auto r = solve_path(g2, bt::costs_of({3, 9}), bt::sites_of({0}, 2));
    CHECK(r.best_vertex == 1);

    CHECK_THROWS_AS(solve_path(make_cycle_graph(4), CostVector::uniform(4, kFixedOne),
                               bt::sites_of({0}, 4)),
                    PreconditionError);
}

TEST_CASE("cycle solver single site window") {
    auto c6 = make_cycle_graph(6);
    auto costs = CostVector::uniform(6, kFixedOne);
    auto s = bt::sites_of({0}, 6);
    auto r = solve_cycle(c6, costs, s);
    CHECK(r.best_load == bt::scaled(3));
    CHECK(r.best_vertex == 1);  // ties at load 3; smallest id wins
    // The opposite vertex also reaches the optimum: its window has 3 nodes.
    CHECK(witness_load(c6, costs, s, 3).max_load == bt::scaled(3));
}

TEST_CASE("cycle solver with several sites") {
    auto c4 = make_cycle_graph(4);
    check_against_brute(c4, bt::costs_of({1, 2, 3, 4}), bt::sites_of({0, 2}, 4), solve_cycle);

    auto c3 = make_cycle_graph(3);
    auto r = solve_cycle(c3, bt::costs_of({5, 1, 9}), bt::sites_of({2, 0}, 3));
    CHECK(r.best_vertex == 1);

    CHECK_THROWS_AS(solve_cycle(make_path_graph(4), CostVector::uniform(4, kFixedOne),
                                bt::sites_of({0}, 4)),
                    PreconditionError);
}

TEST_CASE("window complement conservation on single-site cycles") {
    std::mt19937_64 rng(37);
    for (int round = 0; round < 40; ++round) {
        int n = 3 + static_cast<int>(rng() % 30);
        auto g = make_cycle_graph(n);
        auto costs = random_costs(rng, n, 20);
        auto s = random_sites(rng, n, 1);
        // Every candidate's two loads partition the whole cost.
        for (Vertex v = 0; v < n; ++v) {
            if (s.contains(v)) continue;
            auto w = witness_load(g, costs, s, v);
            CHECK(w.loads[0] + w.loads[1] == costs.total());
        }
        check_against_brute(g, costs, s, solve_cycle);
    }
}

TEST_CASE("per-candidate path loads equal the witness") {
    std::mt19937_64 rng(41);
    for (int round = 0; round < 60; ++round) {
        int n = 2 + static_cast<int>(rng() % 30);
        auto g = make_path_graph(n);
        auto costs = random_costs(rng, n, 25);
        auto s = random_sites(rng, n, 1 + static_cast<int>(rng() % (std::max(1, n - 1))));
        if (s.size() >= n) continue;
        auto loads = path_candidate_loads(g, costs, s);
        for (Vertex v = 0; v < n; ++v) {
            if (s.contains(v)) continue;
            CHECK(loads[v] == witness_load(g, costs, s, v).max_load);
        }
        check_against_brute(g, costs, s, solve_path);
    }
}

TEST_CASE("per-candidate cycle loads equal the witness") {
    std::mt19937_64 rng(47);
    for (int round = 0; round < 60; ++round) {
        int n = 3 + static_cast<int>(rng() % 30);
        auto g = make_cycle_graph(n);
        auto costs = random_costs(rng, n, 25);
        auto s = random_sites(rng, n, 1 + static_cast<int>(rng() % (n - 1)));
        auto loads = cycle_candidate_loads(g, costs, s);
        for (Vertex v = 0; v < n; ++v) {
            if (s.contains(v)) continue;
            CHECK(loads[v] == witness_load(g, costs, s, v).max_load);
        }
    }
}

TEST_CASE("elementary solvers match brute force on random instances") {
    std::mt19937_64 rng(43);
    for (int round = 0; round < 40; ++round) {
        int n = 3 + static_cast<int>(rng() % 24);
        int p = 1 + static_cast<int>(rng() % (n - 1));

        auto cycle_costs = random_costs(rng, n, 30);
        auto cycle_sites = random_sites(rng, n, p);
        check_against_brute(make_cycle_graph(n), cycle_costs, cycle_sites, solve_cycle);

        auto clique_costs = random_costs(rng, n, 30);
        auto clique_sites = random_sites(rng, n, p);
        check_against_brute(make_complete_graph(n), clique_costs, clique_sites, solve_clique);

        auto diam_g = random_diameter_two_graph(rng, n);
        auto diam_costs = random_costs(rng, n, 30);
        auto diam_sites = random_sites(rng, n, p);
        check_against_brute(diam_g, diam_costs, diam_sites, solve_diameter_two);
    }
}
