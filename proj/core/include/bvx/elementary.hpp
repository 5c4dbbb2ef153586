#pragma once

#include <vector>

#include "bvx/cost_vector.hpp"
#include "bvx/graph.hpp"
#include "bvx/voronoi.hpp"

namespace bvx {

/*
 * Decomposition of a path (or cycle) into the maximal site-free stretches
 * together with their bounding sites. Per stretch we keep the node sequence
 * of the closed subpath, its cost prefix sums, the last position still owned
 * by the left bounding site, and the maximum load among all other sites.
 */
struct PathComponent {
    std::vector<Vertex> nodes;   // closed subpath: bounding sites included
    bool first_is_site = false;
    bool last_is_site = false;
    std::vector<Fixed> prefix;   // prefix[j] = sum of costs of nodes[0..j]
    int left_owned_limit = -1;   // max j with nodes[j] owned by the left site
    Fixed outside_cap = 0;       // max load among sites bounding other stretches
};

struct PathDecomposition {
    std::vector<PathComponent> components;
};

// Vertices of a path graph from one end to the other, starting at the
// smaller-id endpoint; of a cycle starting at vertex 0 toward its smaller
// neighbor.
std::vector<Vertex> canonical_path_order(const Graph& g);
std::vector<Vertex> canonical_cycle_order(const Graph& g);

PathDecomposition build_path_decomposition(const Graph& g, const CostVector& costs,
                                           const SiteList& s);

// The exact load after inserting each candidate, straight from the stretch
// formulas; 0 at sites. The two solvers below take the arg-min of these.
std::vector<Fixed> path_candidate_loads(const Graph& g, const CostVector& costs,
                                        const SiteList& s);
std::vector<Fixed> cycle_candidate_loads(const Graph& g, const CostVector& costs,
                                         const SiteList& s);

SolveResult solve_clique(const Graph& g, const CostVector& costs, const SiteList& s);
// Caller asserts diameter <= 2 (verification is O(nm); the CLI owns the
// budget policy).
SolveResult solve_diameter_two(const Graph& g, const CostVector& costs, const SiteList& s);
SolveResult solve_path(const Graph& g, const CostVector& costs, const SiteList& s);
SolveResult solve_cycle(const Graph& g, const CostVector& costs, const SiteList& s);

}  // namespace bvx
