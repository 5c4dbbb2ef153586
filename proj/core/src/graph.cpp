#include "bvx/graph.hpp"

#include <algorithm>
#include <queue>
#include <string>

#include "bvx/error.hpp"

namespace bvx {

namespace {

constexpr Dist kUnreached = -1;

void check_edge_endpoints(int n, Vertex u, Vertex v) {
    if (u < 0 || u >= n || v < 0 || v >= n) {
        throw Error("edge endpoint out of range: (" + std::to_string(u) + ", " +
                    std::to_string(v) + ") with n=" + std::to_string(n));
    }
    if (u == v) throw Error("self-loop at vertex " + std::to_string(u));
}

}  // namespace

Graph Graph::from_edges(int n, const std::vector<std::pair<Vertex, Vertex>>& edges) {
    return from_weighted_edges(n, edges, {});
}

Graph Graph::from_weighted_edges(int n, const std::vector<std::pair<Vertex, Vertex>>& edges,
                                 const std::vector<Dist>& weights) {
    if (n <= 0) throw Error("graph must have at least one vertex");
    if (!weights.empty() && weights.size() != edges.size()) {
        throw Error("weight count does not match edge count");
    }
    for (std::size_t i = 0; i < weights.size(); ++i) {
        if (weights[i] < 1) {
            throw Error("edge weight must be a positive integer, got " +
                        std::to_string(weights[i]));
        }
    }

    Graph g;
    g.n_ = n;
    g.offsets_.assign(static_cast<std::size_t>(n) + 1, 0);
    for (auto [u, v] : edges) {
        check_edge_endpoints(n, u, v);
        ++g.offsets_[u + 1];
        ++g.offsets_[v + 1];
    }
    for (int v = 0; v < n; ++v) g.offsets_[v + 1] += g.offsets_[v];

    g.adjacency_.resize(edges.size() * 2);
    if (!weights.empty()) g.weights_.resize(edges.size() * 2);
    std::vector<std::size_t> cursor(g.offsets_.begin(), g.offsets_.end() - 1);
    for (std::size_t i = 0; i < edges.size(); ++i) {
        auto [u, v] = edges[i];
        Dist w = weights.empty() ? 1 : weights[i];
        g.adjacency_[cursor[u]] = v;
        g.adjacency_[cursor[v]] = u;
        if (!weights.empty()) {
            g.weights_[cursor[u]] = w;
            g.weights_[cursor[v]] = w;
        }
        ++cursor[u];
        ++cursor[v];
    }

    for (int v = 0; v < n; ++v) {
        auto begin = g.offsets_[v], end = g.offsets_[v + 1];
        if (g.weights_.empty()) {
            std::sort(g.adjacency_.begin() + begin, g.adjacency_.begin() + end);
        } else {
            std::vector<std::pair<Vertex, Dist>> row;
            row.reserve(end - begin);
            for (auto i = begin; i < end; ++i) row.emplace_back(g.adjacency_[i], g.weights_[i]);
            std::sort(row.begin(), row.end());
            for (std::size_t i = 0; i < row.size(); ++i) {
                g.adjacency_[begin + i] = row[i].first;
                g.weights_[begin + i] = row[i].second;
            }
        }
        for (auto i = begin + 1; i < end; ++i) {
            if (g.adjacency_[i] == g.adjacency_[i - 1]) {
                throw Error("parallel edge between " + std::to_string(v) + " and " +
                            std::to_string(g.adjacency_[i]));
            }
        }
    }

    // Connectivity is part of the data-model contract.
    auto d = sssp_distances(g, 0);
    for (int v = 0; v < n; ++v) {
        if (d[v] == kUnreached) {
            throw Error("graph is not connected: vertex " + std::to_string(v) +
                        " is unreachable from vertex 0");
        }
    }
    return g;
}

std::vector<std::pair<Vertex, Vertex>> Graph::edges() const {
    std::vector<std::pair<Vertex, Vertex>> out;
    out.reserve(edge_count());
    for (Vertex u = 0; u < n_; ++u) {
        for (Vertex v : neighbors(u)) {
            if (u < v) out.emplace_back(u, v);
        }
    }
    return out;
}

std::vector<Dist> sssp_distances(const Graph& g, Vertex source) {
    std::vector<Vertex> one{source};
    return multi_source_distances(g, one);
}

std::vector<Dist> multi_source_distances(const Graph& g, std::span<const Vertex> sources) {
    const int n = g.vertex_count();
    std::vector<Dist> dist(n, kUnreached);
    for (Vertex s : sources) {
        if (s < 0 || s >= n) throw Error("source vertex out of range");
    }

    if (!g.weighted()) {
        std::queue<Vertex> queue;
        for (Vertex s : sources) {
            if (dist[s] != 0) {
                dist[s] = 0;
                queue.push(s);
            }
        }
        while (!queue.empty()) {
            Vertex v = queue.front();
            queue.pop();
            for (Vertex u : g.neighbors(v)) {
                if (dist[u] == kUnreached) {
                    dist[u] = dist[v] + 1;
                    queue.push(u);
                }
            }
        }
        return dist;
    }

    using Entry = std::pair<Dist, Vertex>;
    std::priority_queue<Entry, std::vector<Entry>, std::greater<>> heap;
    for (Vertex s : sources) {
        dist[s] = 0;
        heap.emplace(0, s);
    }
    while (!heap.empty()) {
        auto [d, v] = heap.top();
        heap.pop();
        if (d != dist[v]) continue;
        auto nbrs = g.neighbors(v);
        auto lens = g.edge_lengths(v);
        for (std::size_t i = 0; i < nbrs.size(); ++i) {
            Dist nd = d + lens[i];
            if (dist[nbrs[i]] == kUnreached || nd < dist[nbrs[i]]) {
                dist[nbrs[i]] = nd;
                heap.emplace(nd, nbrs[i]);
            }
        }
    }
    return dist;
}

bool is_complete(const Graph& g) {
    auto n = static_cast<std::size_t>(g.vertex_count());
    return g.edge_count() == n * (n - 1) / 2;
}

bool is_path(const Graph& g) {
    if (g.weighted()) return false;
    const int n = g.vertex_count();
    if (n == 1) return true;
    int ends = 0;
    for (Vertex v = 0; v < n; ++v) {
        int d = g.degree(v);
        if (d == 1) {
            ++ends;
        } else if (d != 2) {
            return false;
        }
    }
    return ends == 2;
}

bool is_cycle(const Graph& g) {
    if (g.weighted()) return false;
    const int n = g.vertex_count();
    if (n < 3) return false;
    for (Vertex v = 0; v < n; ++v) {
        if (g.degree(v) != 2) return false;
    }
    return true;
}

bool is_tree(const Graph& g) {
    // Connected by construction, so the edge count decides.
    return !g.weighted() && g.edge_count() == static_cast<std::size_t>(g.vertex_count()) - 1;
}

bool has_diameter_at_most_two(const Graph& g) {
    const int n = g.vertex_count();
    for (Vertex v = 0; v < n; ++v) {
        auto d = sssp_distances(g, v);
        for (Vertex u = 0; u < n; ++u) {
            if (d[u] > 2) return false;
        }
    }
    return true;
}

}  // namespace bvx
