#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "bvx/cost_vector.hpp"
#include "bvx/graph.hpp"
#include "bvx/voronoi.hpp"

namespace bvx {

/*
 * Rooted view of a tree: parent/depth arrays, subtree costs and binary
 * lifting jump pointers for level-ancestor queries.
 */
struct RootedTreeIndex {
    Vertex root = 0;
    std::vector<int> parent;
    std::vector<int> depth;
    std::vector<Vertex> bfs_order;
    std::vector<Fixed> subtree_cost;
    std::vector<std::vector<Vertex>> up;  // up[j][v]: 2^j-th ancestor of v

    static RootedTreeIndex build(const Graph& tree, Vertex root, std::span<const Fixed> costs);

    // Ancestor of v at the given depth measured from the root; v itself
    // when target_depth == depth[v].
    Vertex ancestor_at_depth(Vertex v, int target_depth) const;
};

// Vertex whose removal leaves components of weight at most half the total;
// smallest id on ties. Node-count centroid is the all-ones special case.
Vertex centroid(const Graph& tree, std::span<const std::int64_t> node_weights);

// pi(W(v, s)): cost of all vertices strictly closer to v than to s, for
// every v, via subtree sums at level ancestors. alpha(s) = 0.
std::vector<Fixed> alpha_all(const Graph& tree, Vertex s, std::span<const Fixed> costs);

// beta(v) = sum of pi(x) over x behind c from v's side with d(x,v) < d(x,S);
// beta(c) is reported as 0.
std::vector<Fixed> beta_all(const Graph& tree, Vertex c, const SiteList& s,
                            std::span<const Fixed> costs);

// gamma(v) = max load, after inserting v, among sites separated from v by c
// whose territory avoids c; 0 when no site qualifies. gamma(c) = 0.
std::vector<Fixed> gamma_all(const Graph& tree, Vertex c, const SiteList& s,
                             std::span<const Fixed> costs);

struct TreeSolveOptions {
    bool site_weighted_centroid = false;
    // Re-derives the recursion's carried quantities per frame by direct
    // diagram evaluation; quadratic, for tests on small inputs only.
    bool check_invariants = false;
};

struct TreeSolveStats {
    int max_depth = 0;       // deepest recursion frame
    int max_site_depth = 0;  // deepest frame that still carries sites
};

SolveResult solve_tree(const Graph& g, const CostVector& costs, const SiteList& s,
                       const TreeSolveOptions& options = {}, TreeSolveStats* stats = nullptr);

}  // namespace bvx
