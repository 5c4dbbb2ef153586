#include "bvx/elementary.hpp"

#include <algorithm>
#include <array>
#include <string>

#include "bvx/error.hpp"

namespace bvx {

namespace {

void require_candidates(const Graph& g, const SiteList& s) {
    if (s.size() >= g.vertex_count()) {
        throw Error("no candidate vertex: every vertex is a site");
    }
    if (s.size() == 0) throw Error("no sites");
}

// Largest load among sites outside a set of at most two excluded ones.
// Tracking the three top-loaded sites is enough.
class TopThreeLoads {
public:
    TopThreeLoads(const SiteList& s, const std::vector<Fixed>& loads) {
        for (int i = 0; i < s.size(); ++i) consider(s.at(i), loads[i]);
    }

    Fixed max_excluding(Vertex a, Vertex b) const {
        for (const auto& [site, load] : top_) {
            if (site >= 0 && site != a && site != b) return load;
        }
        return 0;  // no site outside the exclusions; loads are >= 0
    }

private:
    void consider(Vertex site, Fixed load) {
        for (std::size_t i = 0; i < top_.size(); ++i) {
            if (top_[i].first < 0 || load > top_[i].second) {
                for (std::size_t j = top_.size() - 1; j > i; --j) top_[j] = top_[j - 1];
                top_[i] = {site, load};
                return;
            }
        }
    }

    std::array<std::pair<Vertex, Fixed>, 3> top_{{{-1, 0}, {-1, 0}, {-1, 0}}};
};

struct Candidate {
    Fixed load;
    Vertex vertex;
};

void keep_min(Candidate& best, Fixed load, Vertex v) {
    if (best.vertex < 0 || load < best.load || (load == best.load && v < best.vertex)) {
        best = {load, v};
    }
}

// Loads of every candidate within one two-sided stretch. `left_load` and
// `right_load` are the current loads of the bounding sites.
void scan_two_sided(const PathComponent& comp, Fixed left_load, Fixed right_load,
                    std::vector<Fixed>& out) {
    const int t = static_cast<int>(comp.nodes.size());
    const auto& lam = comp.prefix;
    const int jlim = comp.left_owned_limit;
    for (int j = 1; j + 1 < t; ++j) {
        int j_left = j / 2 + 1;
        int j_right = (t + j) / 2 - 1;
        Fixed own = lam[j_right] - lam[j_left - 1];
        Fixed left_after = left_load - (lam[jlim] - lam[j_left - 1]);
        Fixed right_after = right_load - (lam[j_right] - lam[jlim]);
        out[comp.nodes[j]] = std::max({comp.outside_cap, own, left_after, right_after});
    }
}

// One-sided stretch, site at the right end of `nodes`.
void scan_one_sided(const std::vector<Vertex>& nodes, const std::vector<Fixed>& prefix,
                    Fixed site_load, Fixed outside_cap, std::vector<Fixed>& out) {
    const int t = static_cast<int>(nodes.size());
    for (int j = 0; j + 1 < t; ++j) {
        int j_right = (t + j) / 2 - 1;
        Fixed own = prefix[j_right];
        out[nodes[j]] = std::max({outside_cap, own, site_load - own});
    }
}

SolveResult arg_min_result(const Graph& g, const CostVector& costs, const SiteList& s,
                           const std::vector<Fixed>& loads) {
    Candidate best{0, -1};
    for (Vertex v = 0; v < g.vertex_count(); ++v) {
        if (!s.contains(v)) keep_min(best, loads[v], v);
    }
    return finalize_result(g, costs, s, best.vertex, best.load);
}

PathComponent make_component(const std::vector<Vertex>& nodes, bool first_site, bool last_site,
                             const CostVector& costs, const VoronoiDiagram& vor,
                             const SiteList& s, const TopThreeLoads& top) {
    PathComponent comp;
    comp.nodes = nodes;
    comp.first_is_site = first_site;
    comp.last_is_site = last_site;
    comp.prefix.resize(nodes.size());
    Fixed run = 0;
    for (std::size_t j = 0; j < nodes.size(); ++j) {
        run += costs.at(nodes[j]);
        comp.prefix[j] = run;
    }
    if (first_site) {
        int left_index = s.index_of(nodes.front());
        comp.left_owned_limit = 0;
        for (std::size_t j = 1; j + 1 < nodes.size(); ++j) {
            if (vor.owner[nodes[j]] == left_index) {
                comp.left_owned_limit = static_cast<int>(j);
            }
        }
    }
    Vertex a = first_site ? nodes.front() : -1;
    Vertex b = last_site ? nodes.back() : -1;
    comp.outside_cap = top.max_excluding(a, b);
    return comp;
}

}  // namespace

std::vector<Vertex> canonical_path_order(const Graph& g) {
    const int n = g.vertex_count();
    if (n == 1) return {0};
    Vertex start = -1;
    for (Vertex v = 0; v < n; ++v) {
        if (g.degree(v) == 1) {
            start = v;
            break;
        }
    }
    if (start < 0) throw Error("graph is not a path");
    std::vector<Vertex> order;
    order.reserve(n);
    Vertex prev = -1, cur = start;
    while (true) {
        order.push_back(cur);
        Vertex next = -1;
        for (Vertex u : g.neighbors(cur)) {
            if (u != prev) {
                next = u;
                break;
            }
        }
        if (next < 0) break;
        prev = cur;
        cur = next;
    }
    if (static_cast<int>(order.size()) != n) throw Error("graph is not a path");
    return order;
}

std::vector<Vertex> canonical_cycle_order(const Graph& g) {
    const int n = g.vertex_count();
    std::vector<Vertex> order;
    order.reserve(n);
    Vertex prev = -1, cur = 0;
    do {
        order.push_back(cur);
        auto nbrs = g.neighbors(cur);
        if (nbrs.size() != 2) throw Error("graph is not a cycle");
        Vertex next = (nbrs[0] != prev) ? nbrs[0] : nbrs[1];
        prev = cur;
        cur = next;
    } while (cur != 0 && static_cast<int>(order.size()) < n);
    if (cur != 0 || static_cast<int>(order.size()) != n) throw Error("graph is not a cycle");
    return order;
}

PathDecomposition build_path_decomposition(const Graph& g, const CostVector& costs,
                                           const SiteList& s) {
    if (!is_path(g)) throw Error("graph is not a path");
    require_candidates(g, s);
    auto order = canonical_path_order(g);
    auto vor = prioritized_voronoi(g, costs, s);
    TopThreeLoads top(s, vor.loads);

    PathDecomposition out;
    const int n = static_cast<int>(order.size());
    int i = 0;
    while (i < n) {
        if (s.contains(order[i])) {
            ++i;
            continue;
        }
        int begin = i;
        while (i < n && !s.contains(order[i])) ++i;
        std::vector<Vertex> nodes;
        bool first_site = begin > 0;
        bool last_site = i < n;
        if (first_site) nodes.push_back(order[begin - 1]);
        nodes.insert(nodes.end(), order.begin() + begin, order.begin() + i);
        if (last_site) nodes.push_back(order[i]);
        out.components.push_back(make_component(nodes, first_site, last_site, costs, vor, s, top));
    }
    return out;
}

SolveResult solve_clique(const Graph& g, const CostVector& costs, const SiteList& s) {
    if (g.weighted()) throw PreconditionError("clique solver needs unit-length edges");
    if (!is_complete(g)) throw PreconditionError("graph is not a clique");
    require_candidates(g, s);

    Fixed tail = 0;  // cost of the sites that keep exactly themselves
    Fixed tail_max = 0;
    for (int i = 1; i < s.size(); ++i) {
        tail += costs.at(s.at(i));
        tail_max = std::max(tail_max, costs.at(s.at(i)));
    }
    Fixed pool = costs.total() - tail;

    Candidate best{0, -1};
    for (Vertex v = 0; v < g.vertex_count(); ++v) {
        if (s.contains(v)) continue;
        Fixed load = std::max({tail_max, costs.at(v), pool - costs.at(v)});
        keep_min(best, load, v);
    }
    return finalize_result(g, costs, s, best.vertex, best.load);
}

SolveResult solve_diameter_two(const Graph& g, const CostVector& costs, const SiteList& s) {
    if (g.weighted()) throw PreconditionError("diameter-two solver needs unit-length edges");
    require_candidates(g, s);
    const int n = g.vertex_count();
    auto vor = prioritized_voronoi(g, costs, s);

    // in_closed[v]: v is a site or adjacent to one.
    std::vector<char> in_closed(static_cast<std::size_t>(n), 0);
    for (Vertex site : s.vertices()) {
        in_closed[site] = 1;
        for (Vertex u : g.neighbors(site)) in_closed[u] = 1;
    }

    // mu[i] = max load among sites 2..p other than i; top-2 of those suffice.
    Fixed top1 = -1, top2 = -1;
    int top1_index = -1;
    for (int i = 1; i < s.size(); ++i) {
        if (vor.loads[i] > top1) {
            top2 = top1;
            top1 = vor.loads[i];
            top1_index = i;
        } else if (vor.loads[i] > top2) {
            top2 = vor.loads[i];
        }
    }
    auto mu = [&](int i) {
        Fixed m = (i == top1_index) ? top2 : top1;
        return m < 0 ? Fixed(0) : m;
    };

    Candidate best{0, -1};
    for (Vertex v = 0; v < n; ++v) {
        if (s.contains(v)) continue;
        Fixed fringe = 0;  // cost of N(v) outside the sites' closed neighborhood
        for (Vertex u : g.neighbors(v)) {
            if (!in_closed[u]) fringe += costs.at(u);
        }
        Fixed own = fringe + costs.at(v);
        int i = vor.owner[v];
        Fixed load;
        if (i == 0) {
            load = std::max({own, vor.loads[0] - fringe - costs.at(v), mu(0)});
        } else {
            load = std::max({own, vor.loads[0] - fringe, vor.loads[i] - costs.at(v), mu(i)});
        }
        keep_min(best, load, v);
    }
    return finalize_result(g, costs, s, best.vertex, best.load);
}

std::vector<Fixed> path_candidate_loads(const Graph& g, const CostVector& costs,
                                        const SiteList& s) {
    if (!is_path(g)) throw PreconditionError("graph is not a path");
    require_candidates(g, s);
    auto decomp = build_path_decomposition(g, costs, s);
    auto vor = prioritized_voronoi(g, costs, s);

    std::vector<Fixed> loads(static_cast<std::size_t>(g.vertex_count()), 0);
    for (const auto& comp : decomp.components) {
        if (comp.first_is_site && comp.last_is_site) {
            Fixed left = vor.loads[s.index_of(comp.nodes.front())];
            Fixed right = vor.loads[s.index_of(comp.nodes.back())];
            scan_two_sided(comp, left, right, loads);
        } else if (comp.last_is_site) {
            Fixed site_load = vor.loads[s.index_of(comp.nodes.back())];
            scan_one_sided(comp.nodes, comp.prefix, site_load, comp.outside_cap, loads);
        } else if (comp.first_is_site) {
            // Mirror of the previous case: revert the stretch.
            std::vector<Vertex> nodes(comp.nodes.rbegin(), comp.nodes.rend());
            std::vector<Fixed> prefix(nodes.size());
            Fixed run = 0;
            for (std::size_t j = 0; j < nodes.size(); ++j) {
                run += costs.at(nodes[j]);
                prefix[j] = run;
            }
            Fixed site_load = vor.loads[s.index_of(comp.nodes.front())];
            scan_one_sided(nodes, prefix, site_load, comp.outside_cap, loads);
        } else {
            throw Error("internal: site-free stretch on a path with sites");
        }
    }
    return loads;
}

SolveResult solve_path(const Graph& g, const CostVector& costs, const SiteList& s) {
    return arg_min_result(g, costs, s, path_candidate_loads(g, costs, s));
}

std::vector<Fixed> cycle_candidate_loads(const Graph& g, const CostVector& costs,
                                         const SiteList& s) {
    if (!is_cycle(g)) throw PreconditionError("graph is not a cycle");
    require_candidates(g, s);
    const int n = g.vertex_count();
    auto order = canonical_cycle_order(g);

    std::vector<Fixed> loads(static_cast<std::size_t>(n), 0);
    if (s.size() == 1) {
        // Rotate so the cyclic order starts at the site.
        int shift = 0;
        while (order[shift] != s.at(0)) ++shift;
        std::rotate(order.begin(), order.begin() + shift, order.end());

        std::vector<Fixed> prefix(order.size());
        Fixed run = 0;
        for (std::size_t j = 0; j < order.size(); ++j) {
            run += costs.at(order[j]);
            prefix[j] = run;
        }
        Fixed total = costs.total();

        // The territory of a candidate at position i is the arc strictly
        // closer to it than to position 0; evaluate via the window bounds,
        // mirroring the index when i is past the halfway point.
        for (int i = 1; i < n; ++i) {
            int lo, hi;
            if (2 * i <= n) {
                lo = i / 2 + 1;
                hi = (n + i + 1) / 2 - 1;
            } else {
                int m = n - i;
                int mlo = m / 2 + 1;
                int mhi = (n + m + 1) / 2 - 1;
                lo = n - mhi;
                hi = n - mlo;
            }
            Fixed arc = prefix[hi] - prefix[lo - 1];
            loads[order[i]] = std::max(arc, total - arc);
        }
        return loads;
    }

    auto vor = prioritized_voronoi(g, costs, s);
    TopThreeLoads top(s, vor.loads);

    // Maximal site-free arcs, each bounded by two sites; same per-stretch
    // procedure as on paths.
    int first_site_pos = -1;
    for (int i = 0; i < n; ++i) {
        if (s.contains(order[i])) {
            first_site_pos = i;
            break;
        }
    }
    int pos = first_site_pos;
    do {
        int next = (pos + 1) % n;
        while (!s.contains(order[next])) next = (next + 1) % n;
        int run_len = (next - pos + n) % n;  // nodes strictly between the two sites: run_len-1
        if (run_len > 1) {
            std::vector<Vertex> nodes;
            nodes.reserve(run_len + 1);
            for (int k = 0; k <= run_len; ++k) nodes.push_back(order[(pos + k) % n]);
            auto comp = make_component(nodes, true, true, costs, vor, s, top);
            Fixed left = vor.loads[s.index_of(nodes.front())];
            Fixed right = vor.loads[s.index_of(nodes.back())];
            scan_two_sided(comp, left, right, loads);
        }
        pos = next;
    } while (pos != first_site_pos);

    return loads;
}

SolveResult solve_cycle(const Graph& g, const CostVector& costs, const SiteList& s) {
    return arg_min_result(g, costs, s, cycle_candidate_loads(g, costs, s));
}

}  // namespace bvx
