#pragma once

#include <cstdint>
#include <span>
#include <utility>
#include <vector>

namespace bvx {

using Vertex = int;
using Dist = std::int64_t;

/*
 * Immutable undirected graph in compressed-sparse-row layout.
 *
 * Construction validates the structural contract: simple (no loops, no
 * parallel edges), connected, adjacency lists sorted ascending. Edges are
 * unit length unless explicit positive integer weights are given.
 */
class Graph {
public:
    static Graph from_edges(int n, const std::vector<std::pair<Vertex, Vertex>>& edges);
    static Graph from_weighted_edges(
        int n, const std::vector<std::pair<Vertex, Vertex>>& edges,
        const std::vector<Dist>& weights);

    int vertex_count() const { return n_; }
    std::size_t edge_count() const { return adjacency_.size() / 2; }
    bool weighted() const { return !weights_.empty(); }

    int degree(Vertex v) const { return static_cast<int>(offsets_[v + 1] - offsets_[v]); }

    std::span<const Vertex> neighbors(Vertex v) const {
        return {adjacency_.data() + offsets_[v], adjacency_.data() + offsets_[v + 1]};
    }
    // Edge lengths aligned with neighbors(v); only valid on weighted graphs.
    std::span<const Dist> edge_lengths(Vertex v) const {
        return {weights_.data() + offsets_[v], weights_.data() + offsets_[v + 1]};
    }

    // Undirected edge list with u < v, in ascending order.
    std::vector<std::pair<Vertex, Vertex>> edges() const;

private:
    Graph() = default;

    int n_ = 0;
    std::vector<std::size_t> offsets_;
    std::vector<Vertex> adjacency_;
    std::vector<Dist> weights_;  // empty for unit-length graphs
};

// Exact single-source shortest-path distances: BFS on unit-length graphs,
// Dijkstra (binary heap) when edge weights are present.
std::vector<Dist> sssp_distances(const Graph& g, Vertex source);

// Distances to the nearest of several sources, same algorithm selection.
std::vector<Dist> multi_source_distances(const Graph& g, std::span<const Vertex> sources);

bool is_complete(const Graph& g);
bool is_path(const Graph& g);   // exactly two endpoints of degree 1, rest degree 2
bool is_cycle(const Graph& g);  // every degree 2, n >= 3
bool is_tree(const Graph& g);
// Full O(nm) verification; see the CLI for the budget policy around it.
bool has_diameter_at_most_two(const Graph& g);

}  // namespace bvx
