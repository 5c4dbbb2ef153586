#include <doctest.h>

#include <random>

#include "bvx/error.hpp"
#include "bvx/fixed.hpp"
#include "bvx/generators.hpp"
#include "bvx/graph.hpp"
#include "bvx/voronoi.hpp"
#include "test_support.hpp"

using namespace bvx;
namespace bt = bvx::testing;

TEST_CASE("fixed point decimal round trips") {
    CHECK(fixed_from_decimal("3") == 3 * kFixedOne);
    CHECK(fixed_from_decimal("0.25") == 250'000);
    CHECK(fixed_from_decimal("12.000001") == 12'000'001);
    CHECK(fixed_to_decimal(12'000'001) == "12.000001");
    CHECK(fixed_to_decimal(5 * kFixedOne) == "5");
    CHECK_THROWS_AS(fixed_from_decimal("-1"), Error);
    CHECK_THROWS_AS(fixed_from_decimal("1.0000001"), Error);
    CHECK_THROWS_AS(fixed_from_decimal("abc"), Error);
}

TEST_CASE("graph construction enforces the data model") {
    CHECK_THROWS_AS(Graph::from_edges(2, {{0, 0}}), Error);            // loop
    CHECK_THROWS_AS(Graph::from_edges(2, {{0, 1}, {1, 0}}), Error);    // parallel
    CHECK_THROWS_AS(Graph::from_edges(3, {{0, 1}}), Error);            // disconnected
    CHECK_THROWS_AS(Graph::from_edges(2, {{0, 2}}), Error);            // out of range
    CHECK_THROWS_AS(Graph::from_weighted_edges(2, {{0, 1}}, {0}), Error);  // weight < 1

    auto g = Graph::from_edges(3, {{2, 1}, {0, 2}});
    CHECK(g.vertex_count() == 3);
    CHECK(g.edge_count() == 2);
    auto nbrs = g.neighbors(2);
    REQUIRE(nbrs.size() == 2);
    CHECK(nbrs[0] == 0);  // sorted ascending
    CHECK(nbrs[1] == 1);
}

TEST_CASE("bfs distances on a three-vertex path") {
    auto g = make_path_graph(3);
    auto d = sssp_distances(g, 0);
    CHECK(d == std::vector<Dist>{0, 1, 2});
    CHECK(sssp_distances(g, 1)[1] == 0);
}

TEST_CASE("single-source distances match an all-pairs oracle") {
    std::mt19937_64 rng(42);
    for (int round = 0; round < 40; ++round) {
        int n = 2 + static_cast<int>(rng() % 29);
        auto g = random_connected_graph(rng, n, static_cast<int>(rng() % (n + 1)));
        auto oracle = bt::all_pairs_floyd_warshall(g);
        Vertex src = static_cast<Vertex>(rng() % n);
        auto d = sssp_distances(g, src);
        for (Vertex v = 0; v < n; ++v) CHECK(d[v] == oracle[src][v]);
    }
}

TEST_CASE("dijkstra on weighted graphs matches the oracle") {
    std::mt19937_64 rng(43);
    for (int round = 0; round < 30; ++round) {
        int n = 2 + static_cast<int>(rng() % 20);
        std::vector<std::pair<Vertex, Vertex>> edges;
        std::vector<Dist> weights;
        for (int v = 1; v < n; ++v) {
            edges.emplace_back(static_cast<Vertex>(rng() % v), v);
            weights.push_back(1 + static_cast<Dist>(rng() % 9));
        }
        for (int extra = 0; extra < n / 2; ++extra) {
            Vertex u = static_cast<Vertex>(rng() % n), v = static_cast<Vertex>(rng() % n);
            if (u == v) continue;
            bool dup = false;
            for (auto [a, b] : edges) {
                if ((a == u && b == v) || (a == v && b == u)) dup = true;
            }
            if (dup) continue;
            edges.emplace_back(u, v);
            weights.push_back(1 + static_cast<Dist>(rng() % 9));
        }
        auto g = Graph::from_weighted_edges(n, edges, weights);
        auto oracle = bt::all_pairs_floyd_warshall(g);
        auto d = sssp_distances(g, 0);
        for (Vertex v = 0; v < n; ++v) CHECK(d[v] == oracle[0][v]);
    }
}

TEST_CASE("class predicates") {
    CHECK(is_complete(make_complete_graph(4)));
    CHECK_FALSE(is_complete(make_path_graph(4)));
    CHECK(is_path(make_path_graph(5)));
    CHECK_FALSE(is_path(make_cycle_graph(5)));
    CHECK(is_cycle(make_cycle_graph(5)));
    CHECK(is_tree(make_star_graph(5)));
    CHECK(has_diameter_at_most_two(make_star_graph(6)));
    CHECK_FALSE(has_diameter_at_most_two(make_path_graph(4)));
}

TEST_CASE("cost vector validation") {
    CHECK_THROWS_AS(CostVector::from_raw({-1}), Error);
    auto c = CostVector::from_integers({1, 2, 3});
    CHECK(c.total() == bt::scaled(6));
    CHECK_THROWS_AS(CostVector::from_raw({kMaxTotalCost, kFixedOne}), Error);
}

TEST_CASE("site list validation") {
    CHECK_THROWS_AS(SiteList::of({1, 1}, 3), Error);
    CHECK_THROWS_AS(SiteList::of({3}, 3), Error);
    auto s = SiteList::of({2, 0}, 3);
    CHECK(s.index_of(2) == 0);
    CHECK(s.index_of(0) == 1);
    CHECK(s.index_of(1) == -1);
}
