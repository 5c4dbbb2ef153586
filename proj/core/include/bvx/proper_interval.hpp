#pragma once

#include <vector>

#include "bvx/cost_vector.hpp"
#include "bvx/graph.hpp"
#include "bvx/voronoi.hpp"

namespace bvx {

// Vertex order of a proper interval graph in which every closed
// neighborhood occupies a consecutive range of positions.
struct UmbrellaOrder {
    std::vector<Vertex> order;
    std::vector<int> pos;  // inverse permutation

    Vertex first() const { return order.front(); }
};

// Three LexBFS sweeps plus the consecutive-neighborhood check; throws with
// a violating vertex triple when the graph is not proper interval.
UmbrellaOrder recognize_proper_interval(const Graph& g);

/*
 * Distance skeleton of a proper interval graph: layer(v) is the BFS
 * distance from the order's first vertex, and sigma is a total order such
 * that for layer(u) <= layer(v),
 *     d(u,v) = layer(v) - layer(u)       if layer(u) < layer(v) and
 *                                           sigma(v) < sigma(u),
 *     d(u,v) = layer(v) - layer(u) + 1   otherwise (u != v).
 */
struct SigmaOrdering {
    std::vector<int> layer;
    std::vector<int> sigma;  // 1..n
};

// Builds sigma by rank doubling over greedy furthest-right walks and
// self-validates the distance formula (all pairs on small graphs, sampled
// sources on large ones). A validation failure throws: it signals a
// construction bug, never bad input.
SigmaOrdering sigma_ordering(const Graph& g, const UmbrellaOrder& order);

// Load of the new site itself for every candidate v (0 at sites).
std::vector<Fixed> territory_loads(const Graph& g, const SigmaOrdering& sig,
                                   const CostVector& costs, const SiteList& s,
                                   bool check_invariants = false);

// Maximum load among the former sites for every candidate v (0 at sites).
std::vector<Fixed> site_loads_max(const Graph& g, const SigmaOrdering& sig,
                                  const CostVector& costs, const SiteList& s,
                                  bool check_invariants = false);

SolveResult solve_proper_interval(const Graph& g, const CostVector& costs, const SiteList& s);

}  // namespace bvx
