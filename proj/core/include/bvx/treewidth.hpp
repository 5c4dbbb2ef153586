#pragma once

#include <vector>

#include "bvx/cost_vector.hpp"
#include "bvx/graph.hpp"
#include "bvx/voronoi.hpp"

namespace bvx {

struct TreeDecomposition {
    std::vector<std::vector<Vertex>> bags;
    std::vector<std::pair<int, int>> bag_edges;  // tree edges between bag ids

    int width() const;
};

// Checks the bag tree and the three covering conditions; returns the width,
// throws naming the violated condition otherwise.
int validate_tree_decomposition(const Graph& g, const TreeDecomposition& td);

// Min-degree elimination ordering. Always valid; width not guaranteed
// minimal.
TreeDecomposition heuristic_tree_decomposition(const Graph& g);

/*
 * Split A union B = V with separator X = A intersect B and no edges between
 * A minus X and B minus X. The separator is kept in ascending vertex order,
 * which fixes the tie-breaking of the range-query decomposition.
 */
struct SeparatorSplit {
    std::vector<Vertex> a_side;     // includes the separator
    std::vector<Vertex> b_side;     // includes the separator
    std::vector<Vertex> separator;  // ascending
};

// delta(a, B) = total cost of b in B minus X with d(b, a) < bound(b), for
// every a in A minus X, answered through one k-range-tree box query per
// separator vertex. Entries outside A minus X are 0.
std::vector<Fixed> separator_delta(const Graph& g, const SeparatorSplit& split,
                                   const CostVector& costs, const std::vector<Dist>& bound);

struct WallStats {
    int max_depth = 0;        // deepest frame
    int fallback_frames = 0;  // frames finished brute-force for lack of balance
    // Every split that actually recursed kept both sides within 2n/3.
    bool recursed_within_balance = true;
};

// delta(v) = total cost of u with d(u, v) < bound(u), for every v with
// bound(v) > 0, via balanced-separator recursion over the decomposition.
// `bound` is fixed once against this graph and carried through unchanged.
std::vector<Fixed> wall_delta(const Graph& g, const TreeDecomposition& td,
                              const CostVector& costs, const std::vector<Dist>& bound,
                              WallStats* stats = nullptr);

SolveResult solve_treewidth(const Graph& g, const TreeDecomposition& td, const CostVector& costs,
                            const SiteList& s);

}  // namespace bvx
