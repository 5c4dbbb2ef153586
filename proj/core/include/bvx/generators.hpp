#pragma once

#include <random>
#include <utility>
#include <vector>

#include "bvx/cost_vector.hpp"
#include "bvx/graph.hpp"
#include "bvx/treewidth.hpp"
#include "bvx/voronoi.hpp"

namespace bvx {

// Seeded instance factories shared by tests and the benchmark harness.

Graph make_path_graph(int n);
Graph make_cycle_graph(int n);
Graph make_complete_graph(int n);
Graph make_star_graph(int n);  // vertex 0 is the center

Graph random_tree(std::mt19937_64& rng, int n);
// Random spanning tree plus extra random edges.
Graph random_connected_graph(std::mt19937_64& rng, int n, int extra_edges);
Graph random_diameter_two_graph(std::mt19937_64& rng, int n);
// Intersection graph of n unit intervals; `spread` stretches the centers
// (larger spread, sparser graph). Always connected.
Graph random_proper_interval_graph(std::mt19937_64& rng, int n, double spread);
// Subgraph of a random k-tree, together with the k-tree's decomposition
// (still valid for the subgraph).
std::pair<Graph, TreeDecomposition> random_partial_ktree(std::mt19937_64& rng, int n, int k,
                                                         double keep_probability);

CostVector random_costs(std::mt19937_64& rng, int n, int max_value);
SiteList random_sites(std::mt19937_64& rng, int n, int count);

}  // namespace bvx
