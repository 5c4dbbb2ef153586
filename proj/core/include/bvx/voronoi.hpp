#pragma once

#include <vector>

#include "bvx/cost_vector.hpp"
#include "bvx/fixed.hpp"
#include "bvx/graph.hpp"

namespace bvx {

// Ordered list of pairwise-distinct sites; the position in the list is the
// priority (earlier wins distance ties).
class SiteList {
public:
    static SiteList of(std::vector<Vertex> sites, int vertex_count);

    int size() const { return static_cast<int>(sites_.size()); }
    Vertex at(int i) const { return sites_[i]; }
    const std::vector<Vertex>& vertices() const { return sites_; }
    bool contains(Vertex v) const { return index_of_[v] >= 0; }
    // Priority index of a site, -1 for non-sites.
    int index_of(Vertex v) const { return index_of_[v]; }

    // A copy with one lowest-priority site appended.
    SiteList with_appended(Vertex v) const;

private:
    SiteList() = default;

    std::vector<Vertex> sites_;
    std::vector<int> index_of_;
};

// Prioritized graph Voronoi diagram: every vertex belongs to its first
// closest site in the list.
struct VoronoiDiagram {
    std::vector<int> owner;   // vertex -> priority index of its site
    std::vector<Dist> dist;   // vertex -> distance to the nearest site
    std::vector<Fixed> loads; // priority index -> territory cost
    Fixed max_load = 0;
};

VoronoiDiagram prioritized_voronoi(const Graph& g, const CostVector& costs, const SiteList& s);

// Loads of the diagram for S + v. `loads` has |S|+1 entries, the candidate
// site's own load last. Used to certify any solver's answer independently.
struct WitnessEvaluation {
    Fixed max_load = 0;
    std::vector<Fixed> loads;
};

WitnessEvaluation witness_load(const Graph& g, const CostVector& costs, const SiteList& s,
                               Vertex v);

struct SolveResult {
    Vertex best_vertex = -1;
    Fixed best_load = 0;
    // (site vertex, load) for every site of S + best_vertex, the new site last.
    std::vector<std::pair<Vertex, Fixed>> site_loads;
};

// Exact optimum by evaluating every candidate; the correctness oracle for
// all specialized solvers. Ties broken by smallest vertex id.
SolveResult brute_force_balanced_vertex(const Graph& g, const CostVector& costs,
                                        const SiteList& s);

// Fills a SolveResult for a solver-chosen vertex: per-site loads come from
// an independent witness evaluation.
SolveResult finalize_result(const Graph& g, const CostVector& costs, const SiteList& s,
                            Vertex best_vertex, Fixed best_load);

}  // namespace bvx
