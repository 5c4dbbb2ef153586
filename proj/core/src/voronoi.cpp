#include "bvx/voronoi.hpp"

#include <algorithm>
#include <numeric>
#include <string>

#include "bvx/error.hpp"

namespace bvx {

SiteList SiteList::of(std::vector<Vertex> sites, int vertex_count) {
    SiteList s;
    s.index_of_.assign(static_cast<std::size_t>(vertex_count), -1);
    for (std::size_t i = 0; i < sites.size(); ++i) {
        Vertex v = sites[i];
        if (v < 0 || v >= vertex_count) {
            throw Error("site " + std::to_string(v) + " out of range");
        }
        if (s.index_of_[v] >= 0) {
            throw Error("duplicate site " + std::to_string(v) +
                        "; sites must be pairwise different vertices");
        }
        s.index_of_[v] = static_cast<int>(i);
    }
    s.sites_ = std::move(sites);
    return s;
}

SiteList SiteList::with_appended(Vertex v) const {
    std::vector<Vertex> extended = sites_;
    extended.push_back(v);
    return of(std::move(extended), static_cast<int>(index_of_.size()));
}

VoronoiDiagram prioritized_voronoi(const Graph& g, const CostVector& costs, const SiteList& s) {
    if (s.size() == 0) throw Error("no sites");
    const int n = g.vertex_count();
    if (costs.size() != n) throw Error("cost vector size does not match graph");

    VoronoiDiagram out;
    out.dist = multi_source_distances(g, s.vertices());

    // Vertices in nondecreasing distance; counting sort keeps this linear
    // on unit-length graphs and deterministic in general.
    std::vector<Vertex> order(static_cast<std::size_t>(n));
    std::iota(order.begin(), order.end(), 0);
    std::sort(order.begin(), order.end(), [&](Vertex a, Vertex b) {
        if (out.dist[a] != out.dist[b]) return out.dist[a] < out.dist[b];
        return a < b;
    });

    out.owner.assign(static_cast<std::size_t>(n), -1);
    for (int i = 0; i < s.size(); ++i) out.owner[s.at(i)] = i;

    const bool weighted = g.weighted();
    for (Vertex v : order) {
        if (out.owner[v] >= 0) continue;
        int best = -1;
        auto nbrs = g.neighbors(v);
        for (std::size_t i = 0; i < nbrs.size(); ++i) {
            Vertex u = nbrs[i];
            Dist w = weighted ? g.edge_lengths(v)[i] : 1;
            if (out.dist[u] + w != out.dist[v]) continue;
            if (best < 0 || out.owner[u] < best) best = out.owner[u];
        }
        out.owner[v] = best;
    }

    out.loads.assign(static_cast<std::size_t>(s.size()), 0);
    for (Vertex v = 0; v < n; ++v) out.loads[out.owner[v]] += costs.at(v);
    out.max_load = *std::max_element(out.loads.begin(), out.loads.end());
    return out;
}

WitnessEvaluation witness_load(const Graph& g, const CostVector& costs, const SiteList& s,
                               Vertex v) {
    if (s.contains(v)) {
        throw Error("witness vertex " + std::to_string(v) + " is already a site");
    }
    auto diagram = prioritized_voronoi(g, costs, s.with_appended(v));
    return {diagram.max_load, std::move(diagram.loads)};
}

SolveResult brute_force_balanced_vertex(const Graph& g, const CostVector& costs,
                                        const SiteList& s) {
    const int n = g.vertex_count();
    if (s.size() >= n) throw Error("no candidate vertex: every vertex is a site");

    SolveResult best;
    std::vector<Fixed> best_loads;
    for (Vertex v = 0; v < n; ++v) {
        if (s.contains(v)) continue;
        auto w = witness_load(g, costs, s, v);
        if (best.best_vertex < 0 || w.max_load < best.best_load) {
            best.best_vertex = v;
            best.best_load = w.max_load;
            best_loads = std::move(w.loads);
        }
    }
    best.site_loads.reserve(best_loads.size());
    for (int i = 0; i < s.size(); ++i) best.site_loads.emplace_back(s.at(i), best_loads[i]);
    best.site_loads.emplace_back(best.best_vertex, best_loads.back());
    return best;
}

SolveResult finalize_result(const Graph& g, const CostVector& costs, const SiteList& s,
                            Vertex best_vertex, Fixed best_load) {
    auto w = witness_load(g, costs, s, best_vertex);
    SolveResult out;
    out.best_vertex = best_vertex;
    out.best_load = best_load;
    out.site_loads.reserve(w.loads.size());
    for (int i = 0; i < s.size(); ++i) out.site_loads.emplace_back(s.at(i), w.loads[i]);
    out.site_loads.emplace_back(best_vertex, w.loads.back());
    return out;
}

}  // namespace bvx
