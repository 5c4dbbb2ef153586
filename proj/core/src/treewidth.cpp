#include "bvx/treewidth.hpp"

#include <algorithm>
#include <limits>
#include <numeric>
#include <queue>
#include <set>
#include <string>

#include "bvx/error.hpp"
#include "bvx/range_tree.hpp"

namespace bvx {

namespace {

// Weighted local graph for the recursion; vertex ids are frame-local.
struct LocalGraph {
    int n = 0;
    std::vector<int> off;
    std::vector<int> adj;
    std::vector<Dist> len;

    std::span<const int> neighbors(int v) const {
        return {adj.data() + off[v], adj.data() + off[v + 1]};
    }
    std::span<const Dist> lengths(int v) const {
        return {len.data() + off[v], len.data() + off[v + 1]};
    }

    static LocalGraph from_edges(int n, const std::vector<std::pair<int, int>>& edges,
                                 const std::vector<Dist>& weights) {
        LocalGraph g;
        g.n = n;
        g.off.assign(n + 1, 0);
        for (auto [u, v] : edges) {
            ++g.off[u + 1];
            ++g.off[v + 1];
        }
        for (int v = 0; v < n; ++v) g.off[v + 1] += g.off[v];
        g.adj.resize(edges.size() * 2);
        g.len.resize(edges.size() * 2);
        std::vector<int> cur(g.off.begin(), g.off.end() - 1);
        for (std::size_t i = 0; i < edges.size(); ++i) {
            auto [u, v] = edges[i];
            g.adj[cur[u]] = v;
            g.len[cur[u]] = weights[i];
            ++cur[u];
            g.adj[cur[v]] = u;
            g.len[cur[v]] = weights[i];
            ++cur[v];
        }
        return g;
    }
};

std::vector<Dist> local_dijkstra(const LocalGraph& g, int src) {
    std::vector<Dist> dist(g.n, -1);
    using Entry = std::pair<Dist, int>;
    std::priority_queue<Entry, std::vector<Entry>, std::greater<>> heap;
    dist[src] = 0;
    heap.emplace(0, src);
    while (!heap.empty()) {
        auto [d, v] = heap.top();
        heap.pop();
        if (d != dist[v]) continue;
        auto nbrs = g.neighbors(v);
        auto lens = g.lengths(v);
        for (std::size_t i = 0; i < nbrs.size(); ++i) {
            Dist nd = d + lens[i];
            if (dist[nbrs[i]] < 0 || nd < dist[nbrs[i]]) {
                dist[nbrs[i]] = nd;
                heap.emplace(nd, nbrs[i]);
            }
        }
    }
    return dist;
}

// delta_i decomposition with precomputed distances from every separator
// vertex. Point coordinates follow the shortest-route tie-breaking: b is
// charged to the first separator vertex on some shortest a-b route.
std::vector<Fixed> separator_delta_impl(int n, const std::vector<int>& a_free,
                                        const std::vector<int>& b_free,
                                        const std::vector<std::vector<Dist>>& sep_dist,
                                        std::span<const Fixed> cost,
                                        const std::vector<Dist>& bound) {
    const int k = static_cast<int>(sep_dist.size());
    std::vector<Fixed> delta(n, 0);
    if (b_free.empty() || a_free.empty()) return delta;

    for (int i = 0; i < k; ++i) {
        std::vector<std::vector<std::int64_t>> points;
        points.reserve(b_free.size());
        std::vector<Fixed> weights;
        weights.reserve(b_free.size());
        for (int b : b_free) {
            std::vector<std::int64_t> p(k);
            for (int j = 0; j < k; ++j) {
                p[j] = (j == i) ? bound[b] - sep_dist[i][b] : sep_dist[j][b] - sep_dist[i][b];
            }
            points.push_back(std::move(p));
            weights.push_back(cost[b]);
        }
        auto tree = KRangeTree::build(points, weights);

        std::vector<DimBound> box(k);
        for (int a : a_free) {
            for (int j = 0; j < k; ++j) {
                box[j] = DimBound{};
                if (j == i) {
                    box[j].lower = sep_dist[i][a];
                    box[j].lower_strict = true;
                } else {
                    box[j].lower = sep_dist[i][a] - sep_dist[j][a];
                    box[j].lower_strict = j < i;
                }
            }
            delta[a] += tree.query(box);
        }
    }
    return delta;
}

struct WallContext {
    const std::vector<Dist>* bound;     // global, fixed throughout
    std::vector<Fixed>* acc;            // global accumulator
    std::vector<char>* done;            // finalized at a shallower level
    WallStats* stats;
};

struct WallFrame {
    LocalGraph g;
    std::vector<Vertex> global;
    std::vector<Fixed> cost;
    std::vector<std::vector<int>> bags;           // filtered to frame vertices
    std::vector<std::vector<int>> bag_neighbors;  // bag tree adjacency
};

void wall_brute(const WallFrame& f, WallContext& ctx) {
    for (int v = 0; v < f.g.n; ++v) {
        Vertex gv = f.global[v];
        if ((*ctx.done)[gv] || (*ctx.bound)[gv] == 0) continue;
        auto d = local_dijkstra(f.g, v);
        Fixed sum = 0;
        for (int u = 0; u < f.g.n; ++u) {
            if (d[u] < (*ctx.bound)[f.global[u]]) sum += f.cost[u];
        }
        (*ctx.acc)[gv] += sum;
        (*ctx.done)[gv] = 1;
    }
}

// Bag whose removal splits the frame into components of at most n/2
// vertices, found by walking the bag tree toward the heavy component.
int pick_balanced_bag(const WallFrame& f, std::vector<int>& comp) {
    const int bag_count = static_cast<int>(f.bags.size());
    const int n = f.g.n;
    std::vector<int> home_bag(n, -1);
    for (int t = 0; t < bag_count; ++t) {
        for (int v : f.bags[t]) {
            if (home_bag[v] < 0) home_bag[v] = t;
        }
    }

    auto components_of = [&](int t) {
        comp.assign(n, -1);
        std::vector<char> in_bag(n, 0);
        for (int v : f.bags[t]) in_bag[v] = 1;
        int comps = 0;
        std::vector<int> stack;
        std::vector<int> sizes;
        for (int r = 0; r < n; ++r) {
            if (in_bag[r] || comp[r] >= 0) continue;
            comp[r] = comps;
            sizes.push_back(0);
            stack.push_back(r);
            while (!stack.empty()) {
                int v = stack.back();
                stack.pop_back();
                ++sizes[comp[r]];
                for (int u : f.g.neighbors(v)) {
                    if (!in_bag[u] && comp[u] < 0) {
                        comp[u] = comps;
                        stack.push_back(u);
                    }
                }
            }
            ++comps;
        }
        return sizes;
    };

    int t = 0;
    std::vector<char> visited_bag(bag_count, 0);
    for (int step = 0; step <= bag_count; ++step) {
        visited_bag[t] = 1;
        auto sizes = components_of(t);
        int heavy = -1;
        for (std::size_t i = 0; i < sizes.size(); ++i) {
            if (sizes[i] > n / 2) heavy = static_cast<int>(i);
        }
        if (heavy < 0) return t;
        // Move toward the bag-tree side holding the heavy component.
        int heavy_vertex = -1;
        for (int v = 0; v < n && heavy_vertex < 0; ++v) {
            if (comp[v] == heavy) heavy_vertex = v;
        }
        int target = home_bag[heavy_vertex];
        // First hop on the bag-tree path t -> target.
        std::vector<int> prev(bag_count, -1);
        std::queue<int> q;
        q.push(t);
        prev[t] = t;
        while (!q.empty()) {
            int b = q.front();
            q.pop();
            for (int nb : f.bag_neighbors[b]) {
                if (prev[nb] < 0) {
                    prev[nb] = b;
                    q.push(nb);
                }
            }
        }
        int hop = target;
        while (prev[hop] != t) hop = prev[hop];
        if (visited_bag[hop]) break;  // should not happen; fall through to scan
        t = hop;
    }

    // Fallback: scan every bag for the best split.
    int best_bag = 0, best_max = std::numeric_limits<int>::max();
    for (int b = 0; b < bag_count; ++b) {
        auto sizes = components_of(b);
        int worst = 0;
        for (int sz : sizes) worst = std::max(worst, sz);
        if (worst < best_max) {
            best_max = worst;
            best_bag = b;
        }
    }
    components_of(best_bag);
    return best_bag;
}

void wall_recurse(WallFrame&& f, WallContext& ctx, int depth) {
    const int n = f.g.n;
    if (ctx.stats) ctx.stats->max_depth = std::max(ctx.stats->max_depth, depth);
    int max_bag = 0;
    for (const auto& b : f.bags) max_bag = std::max(max_bag, static_cast<int>(b.size()));
    if (n <= std::max(8, 3 * max_bag)) {
        wall_brute(f, ctx);
        return;
    }

    std::vector<int> comp;
    int t = pick_balanced_bag(f, comp);
    std::vector<int> sep = f.bags[t];
    std::sort(sep.begin(), sep.end());
    std::vector<char> in_sep(n, 0);
    for (int x : sep) in_sep[x] = 1;

    // Component sizes for grouping.
    int comps = 0;
    for (int v = 0; v < n; ++v) comps = std::max(comps, comp[v] + 1);
    if (comps < 2) {
        wall_brute(f, ctx);
        return;
    }
    std::vector<int> sizes(comps, 0);
    for (int v = 0; v < n; ++v) {
        if (comp[v] >= 0) ++sizes[comp[v]];
    }
    std::vector<int> order(comps);
    std::iota(order.begin(), order.end(), 0);
    std::sort(order.begin(), order.end(), [&](int a, int b) { return sizes[a] > sizes[b]; });
    // Greedy first-fit, largest component into the lighter side.
    std::vector<char> side_b(comps, 0);
    long long size_a = 0, size_b = 0;
    for (int cidx : order) {
        if (size_a <= size_b) {
            size_a += sizes[cidx];
        } else {
            side_b[cidx] = 1;
            size_b += sizes[cidx];
        }
    }
    long long sep_sz = static_cast<long long>(sep.size());
    if (size_b == 0 || 3 * (std::max(size_a, size_b) + sep_sz) > 2LL * n) {
        // Balance unreachable (separator too large for this frame).
        if (ctx.stats) ++ctx.stats->fallback_frames;
        wall_brute(f, ctx);
        return;
    }
    if (ctx.stats && 3 * (std::max(size_a, size_b) + sep_sz) > 2LL * n) {
        ctx.stats->recursed_within_balance = false;
    }

    std::vector<int> a_free, b_free;
    for (int v = 0; v < n; ++v) {
        if (in_sep[v]) continue;
        (side_b[comp[v]] ? b_free : a_free).push_back(v);
    }

    // Distances from separator vertices over the whole frame.
    std::vector<std::vector<Dist>> sep_dist;
    sep_dist.reserve(sep.size());
    for (int x : sep) sep_dist.push_back(local_dijkstra(f.g, x));

    // Separator vertices are finalized here, at the shallowest level where
    // they appear in the chosen bag, and skipped below.
    std::vector<Dist> bound_local(n);
    for (int v = 0; v < n; ++v) bound_local[v] = (*ctx.bound)[f.global[v]];
    for (std::size_t i = 0; i < sep.size(); ++i) {
        Vertex gx = f.global[sep[i]];
        if ((*ctx.done)[gx] || (*ctx.bound)[gx] == 0) continue;
        Fixed sum = 0;
        for (int u = 0; u < n; ++u) {
            if (sep_dist[i][u] < bound_local[u]) sum += f.cost[u];
        }
        (*ctx.acc)[gx] += sum;
        (*ctx.done)[gx] = 1;
    }

    auto cross_a = separator_delta_impl(n, a_free, b_free, sep_dist, f.cost, bound_local);
    auto cross_b = separator_delta_impl(n, b_free, a_free, sep_dist, f.cost, bound_local);
    for (int v : a_free) {
        Vertex gv = f.global[v];
        if (!(*ctx.done)[gv] && (*ctx.bound)[gv] > 0) (*ctx.acc)[gv] += cross_a[v];
    }
    for (int v : b_free) {
        Vertex gv = f.global[v];
        if (!(*ctx.done)[gv] && (*ctx.bound)[gv] > 0) (*ctx.acc)[gv] += cross_b[v];
    }

    // Child frames: one side plus the separator, separator replaced by a
    // clique of exact-distance edges so in-frame distances are preserved.
    for (int pass = 0; pass < 2; ++pass) {
        const auto& free_side = pass == 0 ? a_free : b_free;
        std::vector<int> verts = free_side;
        verts.insert(verts.end(), sep.begin(), sep.end());
        std::sort(verts.begin(), verts.end());
        const int m = static_cast<int>(verts.size());
        std::vector<int> to_child(n, -1);
        for (int i = 0; i < m; ++i) to_child[verts[i]] = i;

        std::vector<std::pair<int, int>> edges;
        std::vector<Dist> weights;
        for (int i = 0; i < m; ++i) {
            int v = verts[i];
            if (in_sep[v]) continue;
            auto nbrs = f.g.neighbors(v);
            auto lens = f.g.lengths(v);
            for (std::size_t j = 0; j < nbrs.size(); ++j) {
                int u = nbrs[j];
                if (to_child[u] < 0) continue;
                if (in_sep[u] || u > v) {
                    edges.emplace_back(i, to_child[u]);
                    weights.push_back(lens[j]);
                }
            }
        }
        for (std::size_t i = 0; i < sep.size(); ++i) {
            for (std::size_t j = i + 1; j < sep.size(); ++j) {
                edges.emplace_back(to_child[sep[i]], to_child[sep[j]]);
                weights.push_back(sep_dist[i][sep[j]]);
            }
        }

        WallFrame child;
        child.g = LocalGraph::from_edges(m, edges, weights);
        child.global.resize(m);
        child.cost.resize(m);
        for (int i = 0; i < m; ++i) {
            child.global[i] = f.global[verts[i]];
            child.cost[i] = f.cost[verts[i]];
        }
        child.bags.reserve(f.bags.size());
        for (const auto& bag : f.bags) {
            std::vector<int> nb;
            for (int v : bag) {
                if (to_child[v] >= 0) nb.push_back(to_child[v]);
            }
            child.bags.push_back(std::move(nb));
        }
        child.bag_neighbors = f.bag_neighbors;
        wall_recurse(std::move(child), ctx, depth + 1);
    }
}

}  // namespace

int TreeDecomposition::width() const {
    int w = -1;
    for (const auto& bag : bags) w = std::max(w, static_cast<int>(bag.size()) - 1);
    return w;
}

int validate_tree_decomposition(const Graph& g, const TreeDecomposition& td) {
    const int n = g.vertex_count();
    const int bag_count = static_cast<int>(td.bags.size());
    if (bag_count == 0) throw Error("tree decomposition has no bags");

    for (const auto& [a, b] : td.bag_edges) {
        if (a < 0 || a >= bag_count || b < 0 || b >= bag_count) {
            throw Error("tree decomposition: bag edge endpoint out of range");
        }
    }
    if (static_cast<int>(td.bag_edges.size()) != bag_count - 1) {
        throw Error("tree decomposition: bag graph is not a tree");
    }
    std::vector<std::vector<int>> bag_adj(bag_count);
    for (const auto& [a, b] : td.bag_edges) {
        bag_adj[a].push_back(b);
        bag_adj[b].push_back(a);
    }
    {
        std::vector<char> seen(bag_count, 0);
        std::vector<int> stack{0};
        seen[0] = 1;
        int reached = 0;
        while (!stack.empty()) {
            int b = stack.back();
            stack.pop_back();
            ++reached;
            for (int nb : bag_adj[b]) {
                if (!seen[nb]) {
                    seen[nb] = 1;
                    stack.push_back(nb);
                }
            }
        }
        if (reached != bag_count) throw Error("tree decomposition: bag graph is not a tree");
    }

    std::vector<std::vector<int>> bags_of(n);
    for (int t = 0; t < bag_count; ++t) {
        auto sorted = td.bags[t];
        std::sort(sorted.begin(), sorted.end());
        if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end()) {
            throw Error("tree decomposition: duplicate vertex in bag " + std::to_string(t));
        }
        for (Vertex v : td.bags[t]) {
            if (v < 0 || v >= n) throw Error("tree decomposition: bag vertex out of range");
            bags_of[v].push_back(t);
        }
    }
    for (Vertex v = 0; v < n; ++v) {
        if (bags_of[v].empty()) {
            throw Error("tree decomposition: vertex " + std::to_string(v) + " is in no bag");
        }
    }
    for (auto [u, v] : g.edges()) {
        bool covered = false;
        const auto& smaller = bags_of[u].size() <= bags_of[v].size() ? bags_of[u] : bags_of[v];
        Vertex other = bags_of[u].size() <= bags_of[v].size() ? v : u;
        for (int t : smaller) {
            if (std::find(td.bags[t].begin(), td.bags[t].end(), other) != td.bags[t].end()) {
                covered = true;
                break;
            }
        }
        if (!covered) {
            throw Error("tree decomposition: edge (" + std::to_string(u) + ", " +
                        std::to_string(v) + ") is inside no bag");
        }
    }
    // Bags of each vertex must induce a connected subtree.
    std::vector<int> mark(bag_count, -1);
    for (Vertex v = 0; v < n; ++v) {
        for (int t : bags_of[v]) mark[t] = v;
        std::vector<int> stack{bags_of[v][0]};
        std::vector<char> seen(bag_count, 0);
        seen[bags_of[v][0]] = 1;
        std::size_t reached = 0;
        while (!stack.empty()) {
            int b = stack.back();
            stack.pop_back();
            ++reached;
            for (int nb : bag_adj[b]) {
                if (!seen[nb] && mark[nb] == v) {
                    seen[nb] = 1;
                    stack.push_back(nb);
                }
            }
        }
        if (reached != bags_of[v].size()) {
            throw Error("tree decomposition: bags containing vertex " + std::to_string(v) +
                        " do not induce a connected subtree");
        }
    }
    return td.width();
}

TreeDecomposition heuristic_tree_decomposition(const Graph& g) {
    const int n = g.vertex_count();
    std::vector<std::set<int>> adj(n);
    for (Vertex v = 0; v < n; ++v) {
        for (Vertex u : g.neighbors(v)) adj[v].insert(u);
    }
    std::vector<char> gone(n, 0);
    std::vector<int> elim_order;
    std::vector<std::vector<int>> elim_bag(n);
    elim_order.reserve(n);

    for (int round = 0; round < n; ++round) {
        int best = -1;
        for (int v = 0; v < n; ++v) {
            if (gone[v]) continue;
            if (best < 0 || adj[v].size() < adj[best].size()) best = v;
        }
        elim_order.push_back(best);
        elim_bag[best].assign(adj[best].begin(), adj[best].end());
        for (int u : elim_bag[best]) {
            adj[u].erase(best);
            for (int w : elim_bag[best]) {
                if (w != u) adj[u].insert(w);
            }
        }
        adj[best].clear();
        gone[best] = 1;
    }

    TreeDecomposition td;
    td.bags.resize(n);
    std::vector<int> position(n);
    for (int i = 0; i < n; ++i) position[elim_order[i]] = i;
    for (int i = 0; i < n; ++i) {
        int v = elim_order[i];
        td.bags[i].push_back(v);
        for (int u : elim_bag[v]) td.bags[i].push_back(u);
        std::sort(td.bags[i].begin(), td.bags[i].end());
        if (!elim_bag[v].empty()) {
            // Attach to the bag of the first-eliminated neighbor.
            int first = elim_bag[v][0];
            for (int u : elim_bag[v]) {
                if (position[u] < position[first]) first = u;
            }
            td.bag_edges.emplace_back(i, position[first]);
        } else if (i + 1 < n) {
            td.bag_edges.emplace_back(i, i + 1);
        }
    }
    return td;
}

std::vector<Fixed> separator_delta(const Graph& g, const SeparatorSplit& split,
                                   const CostVector& costs, const std::vector<Dist>& bound) {
    const int n = g.vertex_count();
    if (static_cast<int>(bound.size()) != n) throw Error("bound vector size mismatch");
    for (Dist d : bound) {
        if (d < 0) throw Error("distance bounds must be nonnegative");
    }
    std::vector<char> in_sep(n, 0), in_a(n, 0), in_b(n, 0);
    for (Vertex x : split.separator) in_sep[x] = 1;
    for (Vertex v : split.a_side) in_a[v] = 1;
    for (Vertex v : split.b_side) in_b[v] = 1;
    std::vector<int> a_free, b_free;
    for (int v = 0; v < n; ++v) {
        if (in_a[v] && !in_sep[v]) a_free.push_back(v);
        if (in_b[v] && !in_sep[v]) b_free.push_back(v);
    }
    std::vector<std::vector<Dist>> sep_dist;
    std::vector<Vertex> sep_sorted = split.separator;
    std::sort(sep_sorted.begin(), sep_sorted.end());
    sep_dist.reserve(sep_sorted.size());
    for (Vertex x : sep_sorted) sep_dist.push_back(sssp_distances(g, x));
    return separator_delta_impl(n, a_free, b_free, sep_dist, costs.values(), bound);
}

std::vector<Fixed> wall_delta(const Graph& g, const TreeDecomposition& td,
                              const CostVector& costs, const std::vector<Dist>& bound,
                              WallStats* stats) {
    validate_tree_decomposition(g, td);
    const int n = g.vertex_count();
    if (static_cast<int>(bound.size()) != n) throw Error("bound vector size mismatch");

    WallFrame top;
    {
        std::vector<std::pair<int, int>> edges;
        std::vector<Dist> weights;
        for (Vertex v = 0; v < n; ++v) {
            auto nbrs = g.neighbors(v);
            for (std::size_t i = 0; i < nbrs.size(); ++i) {
                if (nbrs[i] > v) {
                    edges.emplace_back(v, nbrs[i]);
                    weights.push_back(g.weighted() ? g.edge_lengths(v)[i] : 1);
                }
            }
        }
        top.g = LocalGraph::from_edges(n, edges, weights);
    }
    top.global.resize(n);
    std::iota(top.global.begin(), top.global.end(), 0);
    top.cost.assign(costs.values().begin(), costs.values().end());
    top.bags = td.bags;
    top.bag_neighbors.resize(td.bags.size());
    for (auto [a, b] : td.bag_edges) {
        top.bag_neighbors[a].push_back(b);
        top.bag_neighbors[b].push_back(a);
    }

    std::vector<Fixed> acc(n, 0);
    std::vector<char> done(n, 0);
    WallContext ctx{&bound, &acc, &done, stats};
    wall_recurse(std::move(top), ctx, 1);
    return acc;
}

SolveResult solve_treewidth(const Graph& g, const TreeDecomposition& td, const CostVector& costs,
                            const SiteList& s) {
    validate_tree_decomposition(g, td);
    if (s.size() == 0) throw Error("no sites");
    const int n = g.vertex_count();
    if (s.size() >= n) throw Error("no candidate vertex: every vertex is a site");

    auto vor = prioritized_voronoi(g, costs, s);
    auto own_load = wall_delta(g, td, costs, vor.dist);

    // For each former site: the cost it loses to the new site, via a
    // single-site wall over its territory's costs.
    std::vector<Fixed> best_other(static_cast<std::size_t>(n), 0);
    for (int i = 0; i < s.size(); ++i) {
        std::vector<Fixed> masked(static_cast<std::size_t>(n), 0);
        for (Vertex v = 0; v < n; ++v) {
            if (vor.owner[v] == i) masked[v] = costs.at(v);
        }
        auto site_dist = sssp_distances(g, s.at(i));
        auto taken = wall_delta(g, td, CostVector::from_raw(std::move(masked)), site_dist);
        for (Vertex v = 0; v < n; ++v) {
            if (!s.contains(v)) {
                best_other[v] = std::max(best_other[v], vor.loads[i] - taken[v]);
            }
        }
    }

    Vertex best_vertex = -1;
    Fixed best = 0;
    for (Vertex v = 0; v < n; ++v) {
        if (s.contains(v)) continue;
        Fixed load = std::max(own_load[v], best_other[v]);
        if (best_vertex < 0 || load < best || (load == best && v < best_vertex)) {
            best_vertex = v;
            best = load;
        }
    }
    return finalize_result(g, costs, s, best_vertex, best);
}

}  // namespace bvx
