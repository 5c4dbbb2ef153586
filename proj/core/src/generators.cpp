#include "bvx/generators.hpp"

#include <algorithm>
#include <numeric>
#include <set>

#include "bvx/error.hpp"

namespace bvx {

Graph make_path_graph(int n) {
    std::vector<std::pair<Vertex, Vertex>> edges;
    for (int v = 0; v + 1 < n; ++v) edges.emplace_back(v, v + 1);
    return Graph::from_edges(n, edges);
}

Graph make_cycle_graph(int n) {
    if (n < 3) throw Error("cycle needs at least 3 vertices");
    std::vector<std::pair<Vertex, Vertex>> edges;
    for (int v = 0; v + 1 < n; ++v) edges.emplace_back(v, v + 1);
    edges.emplace_back(0, n - 1);
    return Graph::from_edges(n, edges);
}

Graph make_complete_graph(int n) {
    std::vector<std::pair<Vertex, Vertex>> edges;
    for (int u = 0; u < n; ++u) {
        for (int v = u + 1; v < n; ++v) edges.emplace_back(u, v);
    }
    return Graph::from_edges(n, edges);
}

Graph make_star_graph(int n) {
    std::vector<std::pair<Vertex, Vertex>> edges;
    for (int v = 1; v < n; ++v) edges.emplace_back(0, v);
    return Graph::from_edges(n, edges);
}

Graph random_tree(std::mt19937_64& rng, int n) {
    std::vector<std::pair<Vertex, Vertex>> edges;
    edges.reserve(n - 1);
    for (int v = 1; v < n; ++v) {
        edges.emplace_back(static_cast<Vertex>(rng() % v), v);
    }
    return Graph::from_edges(n, edges);
}

Graph random_connected_graph(std::mt19937_64& rng, int n, int extra_edges) {
    std::set<std::pair<Vertex, Vertex>> edge_set;
    for (int v = 1; v < n; ++v) {
        Vertex u = static_cast<Vertex>(rng() % v);
        edge_set.emplace(std::min(u, v), std::max(u, v));
    }
    const long long possible = static_cast<long long>(n) * (n - 1) / 2;
    for (int tries = 0; tries < 20 * extra_edges && static_cast<long long>(edge_set.size()) <
                                                        std::min<long long>(possible, n - 1 + extra_edges);
         ++tries) {
        Vertex u = static_cast<Vertex>(rng() % n);
        Vertex v = static_cast<Vertex>(rng() % n);
        if (u == v) continue;
        edge_set.emplace(std::min(u, v), std::max(u, v));
    }
    return Graph::from_edges(n, {edge_set.begin(), edge_set.end()});
}

Graph random_diameter_two_graph(std::mt19937_64& rng, int n) {
    for (int attempt = 0; attempt < 200; ++attempt) {
        std::uniform_real_distribution<double> unit(0.0, 1.0);
        double p = 0.35 + 0.5 * unit(rng);
        std::vector<std::pair<Vertex, Vertex>> edges;
        for (int u = 0; u < n; ++u) {
            for (int v = u + 1; v < n; ++v) {
                if (unit(rng) < p) edges.emplace_back(u, v);
            }
        }
        // A universal vertex every other draw keeps the family varied.
        if (attempt % 2 == 1 && n > 1) {
            std::set<std::pair<Vertex, Vertex>> with_hub(edges.begin(), edges.end());
            for (int v = 1; v < n; ++v) with_hub.emplace(0, v);
            edges.assign(with_hub.begin(), with_hub.end());
        }
        try {
            Graph g = Graph::from_edges(n, edges);
            if (has_diameter_at_most_two(g)) return g;
        } catch (const Error&) {
            continue;  // disconnected draw
        }
    }
    return make_complete_graph(n);
}

Graph random_proper_interval_graph(std::mt19937_64& rng, int n, double spread) {
    std::uniform_real_distribution<double> unit(0.0, 1.0);
    std::vector<double> centers(n);
    for (auto& c : centers) c = unit(rng) * spread;
    std::sort(centers.begin(), centers.end());
    // Close any gap over 0.95 so the intersection graph stays connected.
    for (int i = 1; i < n; ++i) {
        if (centers[i] > centers[i - 1] + 0.95) {
            double shift = centers[i] - centers[i - 1] - 0.95;
            for (int j = i; j < n; ++j) centers[j] -= shift;
        }
    }
    std::vector<std::pair<Vertex, Vertex>> edges;
    for (int i = 0; i < n; ++i) {
        for (int j = i + 1; j < n && centers[j] <= centers[i] + 1.0; ++j) {
            edges.emplace_back(i, j);
        }
    }
    return Graph::from_edges(n, edges);
}

std::pair<Graph, TreeDecomposition> random_partial_ktree(std::mt19937_64& rng, int n, int k,
                                                         double keep_probability) {
    if (n < k + 1) throw Error("partial k-tree needs at least k+1 vertices");
    // Grow a k-tree: each new vertex is attached to a random k-clique of an
    // existing bag; the bag {v} + clique is the decomposition node.
    TreeDecomposition td;
    std::vector<std::pair<Vertex, Vertex>> ktree_edges;
    std::vector<int> seed(k + 1);
    std::iota(seed.begin(), seed.end(), 0);
    td.bags.push_back(seed);
    for (int u = 0; u <= k; ++u) {
        for (int v = u + 1; v <= k; ++v) ktree_edges.emplace_back(u, v);
    }
    for (int v = k + 1; v < n; ++v) {
        int host = static_cast<int>(rng() % td.bags.size());
        std::vector<int> bag = td.bags[host];
        while (static_cast<int>(bag.size()) > k) {
            bag.erase(bag.begin() + static_cast<long>(rng() % bag.size()));
        }
        for (int u : bag) ktree_edges.emplace_back(u, v);
        bag.push_back(v);
        std::sort(bag.begin(), bag.end());
        td.bags.push_back(bag);
        td.bag_edges.emplace_back(static_cast<int>(td.bags.size()) - 1, host);
    }

    // Drop edges while the graph stays connected; the decomposition of the
    // full k-tree remains valid for any subgraph on the same vertices.
    std::vector<std::pair<Vertex, Vertex>> edges = ktree_edges;
    std::uniform_real_distribution<double> unit(0.0, 1.0);
    std::shuffle(edges.begin(), edges.end(), rng);
    std::vector<std::pair<Vertex, Vertex>> kept;
    for (std::size_t i = 0; i < edges.size(); ++i) {
        if (unit(rng) < keep_probability) {
            kept.push_back(edges[i]);
            continue;
        }
        // Tentatively drop: keep only if connectivity survives.
        std::vector<std::pair<Vertex, Vertex>> candidate = kept;
        candidate.insert(candidate.end(), edges.begin() + i + 1, edges.end());
        try {
            (void)Graph::from_edges(n, candidate);
        } catch (const Error&) {
            kept.push_back(edges[i]);
        }
    }
    return {Graph::from_edges(n, kept), std::move(td)};
}

CostVector random_costs(std::mt19937_64& rng, int n, int max_value) {
    std::vector<long long> values(n);
    for (auto& v : values) v = static_cast<long long>(rng() % (max_value + 1));
    return CostVector::from_integers(values);
}

SiteList random_sites(std::mt19937_64& rng, int n, int count) {
    std::vector<Vertex> all(n);
    std::iota(all.begin(), all.end(), 0);
    std::shuffle(all.begin(), all.end(), rng);
    all.resize(count);
    return SiteList::of(std::move(all), n);
}

}  // namespace bvx
