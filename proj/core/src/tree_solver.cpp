#include "bvx/tree_solver.hpp"

#include <algorithm>
#include <cassert>
#include <numeric>
#include <string>

#include "bvx/error.hpp"

namespace bvx {

namespace {

// Local adjacency for recursion frames; ids are frame-local and adjacency
// lists stay sorted (relabelings are monotone).
struct LocalTree {
    int n = 0;
    std::vector<int> off;
    std::vector<int> adj;

    std::span<const int> neighbors(int v) const {
        return {adj.data() + off[v], adj.data() + off[v + 1]};
    }
};

LocalTree local_from_graph(const Graph& g) {
    LocalTree t;
    t.n = g.vertex_count();
    t.off.assign(t.n + 1, 0);
    t.adj.reserve(2 * g.edge_count());
    for (Vertex v = 0; v < t.n; ++v) {
        for (Vertex u : g.neighbors(v)) t.adj.push_back(u);
        t.off[v + 1] = static_cast<int>(t.adj.size());
    }
    return t;
}

std::vector<int> local_bfs(const LocalTree& t, int src) {
    std::vector<int> dist(t.n, -1);
    std::vector<int> queue;
    queue.reserve(t.n);
    dist[src] = 0;
    queue.push_back(src);
    for (std::size_t head = 0; head < queue.size(); ++head) {
        int v = queue[head];
        for (int u : t.neighbors(v)) {
            if (dist[u] < 0) {
                dist[u] = dist[v] + 1;
                queue.push_back(u);
            }
        }
    }
    return dist;
}

struct LocalVoronoi {
    std::vector<int> owner;
    std::vector<int> dist;
    std::vector<Fixed> loads;
};

LocalVoronoi local_voronoi(const LocalTree& t, std::span<const Fixed> cost,
                           std::span<const int> sites) {
    LocalVoronoi out;
    out.dist.assign(t.n, -1);
    out.owner.assign(t.n, -1);
    std::vector<int> queue;
    queue.reserve(t.n);
    for (std::size_t i = 0; i < sites.size(); ++i) {
        out.dist[sites[i]] = 0;
        out.owner[sites[i]] = static_cast<int>(i);
        queue.push_back(sites[i]);
    }
    for (std::size_t head = 0; head < queue.size(); ++head) {
        int v = queue[head];
        for (int u : t.neighbors(v)) {
            if (out.dist[u] < 0) {
                out.dist[u] = out.dist[v] + 1;
                queue.push_back(u);
            }
        }
    }
    // Queue order is nondecreasing in distance, so owners propagate.
    for (int v : queue) {
        if (out.owner[v] >= 0) continue;
        int best = -1;
        for (int u : t.neighbors(v)) {
            if (out.dist[u] == out.dist[v] - 1 && (best < 0 || out.owner[u] < best)) {
                best = out.owner[u];
            }
        }
        out.owner[v] = best;
    }
    out.loads.assign(sites.size(), 0);
    for (int v = 0; v < t.n; ++v) out.loads[out.owner[v]] += cost[v];
    return out;
}

// Per-vertex maximum component weight after removal; the centroid is the
// arg-min, which always meets the <= W/2 guarantee.
int local_centroid(const LocalTree& t, std::span<const std::int64_t> weights) {
    std::vector<int> order, parent(t.n, -1);
    order.reserve(t.n);
    order.push_back(0);
    std::vector<char> seen(t.n, 0);
    seen[0] = 1;
    for (std::size_t head = 0; head < order.size(); ++head) {
        int v = order[head];
        for (int u : t.neighbors(v)) {
            if (!seen[u]) {
                seen[u] = 1;
                parent[u] = v;
                order.push_back(u);
            }
        }
    }
    std::int64_t total = 0;
    std::vector<std::int64_t> sub(t.n, 0);
    for (int v = 0; v < t.n; ++v) {
        sub[v] = weights[v];
        total += weights[v];
    }
    for (auto it = order.rbegin(); it != order.rend(); ++it) {
        if (parent[*it] >= 0) sub[parent[*it]] += sub[*it];
    }
    int best = -1;
    std::int64_t best_max = 0;
    for (int v = 0; v < t.n; ++v) {
        std::int64_t worst = total - sub[v];
        for (int u : t.neighbors(v)) {
            if (u != parent[v]) worst = std::max(worst, sub[u]);
        }
        if (best < 0 || worst < best_max) {
            best = v;
            best_max = worst;
        }
    }
    assert(2 * best_max <= total);
    return best;
}

struct LocalRootedIndex {
    int root;
    std::vector<int> parent, depth, order;
    std::vector<Fixed> subtree_cost;
    std::vector<std::vector<int>> up;

    static LocalRootedIndex build(const LocalTree& t, int root, std::span<const Fixed> cost) {
        LocalRootedIndex idx;
        idx.root = root;
        idx.parent.assign(t.n, root);
        idx.depth.assign(t.n, 0);
        idx.order.reserve(t.n);
        idx.order.push_back(root);
        std::vector<char> seen(t.n, 0);
        seen[root] = 1;
        int max_depth = 0;
        for (std::size_t head = 0; head < idx.order.size(); ++head) {
            int v = idx.order[head];
            for (int u : t.neighbors(v)) {
                if (!seen[u]) {
                    seen[u] = 1;
                    idx.parent[u] = v;
                    idx.depth[u] = idx.depth[v] + 1;
                    max_depth = std::max(max_depth, idx.depth[u]);
                    idx.order.push_back(u);
                }
            }
        }
        idx.subtree_cost.assign(t.n, 0);
        for (int v = 0; v < t.n; ++v) idx.subtree_cost[v] = cost[v];
        for (auto it = idx.order.rbegin(); it != idx.order.rend(); ++it) {
            if (*it != root) idx.subtree_cost[idx.parent[*it]] += idx.subtree_cost[*it];
        }
        int levels = 1;
        while ((1 << levels) <= max_depth) ++levels;
        idx.up.assign(levels, idx.parent);
        for (int j = 1; j < levels; ++j) {
            for (int v = 0; v < t.n; ++v) idx.up[j][v] = idx.up[j - 1][idx.up[j - 1][v]];
        }
        return idx;
    }

    int ancestor_at_depth(int v, int target_depth) const {
        int hops = depth[v] - target_depth;
        assert(hops >= 0);
        for (int j = 0; hops > 0; ++j, hops >>= 1) {
            if (hops & 1) v = up[j][v];
        }
        return v;
    }
};

std::vector<Fixed> local_alpha(const LocalTree& t, int s, std::span<const Fixed> cost) {
    auto idx = LocalRootedIndex::build(t, s, cost);
    std::vector<Fixed> alpha(t.n, 0);
    for (int v = 0; v < t.n; ++v) {
        if (v == s) continue;
        int q = idx.depth[v] / 2;
        alpha[v] = idx.subtree_cost[idx.ancestor_at_depth(v, q + 1)];
    }
    return alpha;
}

// Component ids of T minus {c}; comp[c] = -1. Also fills per-component sizes.
std::vector<int> split_components(const LocalTree& t, int c, std::vector<int>& comp_size) {
    std::vector<int> comp(t.n, -1);
    comp_size.clear();
    std::vector<int> stack;
    for (int r : t.neighbors(c)) {
        if (comp[r] >= 0) continue;
        int id = static_cast<int>(comp_size.size());
        comp_size.push_back(0);
        comp[r] = id;
        stack.push_back(r);
        while (!stack.empty()) {
            int v = stack.back();
            stack.pop_back();
            ++comp_size[id];
            for (int u : t.neighbors(v)) {
                if (u != c && comp[u] < 0) {
                    comp[u] = id;
                    stack.push_back(u);
                }
            }
        }
    }
    return comp;
}

std::vector<Fixed> local_beta(const LocalTree& t, int c, std::span<const Fixed> cost,
                              const std::vector<int>& dist_s, const std::vector<int>& dist_c,
                              const std::vector<int>& comp, const std::vector<int>& comp_size) {
    const int n = t.n;
    // a[i] = cost of all x with dist_s(x) - dist_c(x) > i, clamped to the
    // query range; then the same restricted to each component.
    std::vector<Fixed> bucket(n + 2, 0);
    for (int x = 0; x < n; ++x) {
        long long key = static_cast<long long>(dist_s[x]) - dist_c[x];
        if (key >= 1) bucket[std::min<long long>(key, n + 1)] += cost[x];
    }
    std::vector<Fixed> a(n + 2, 0);
    for (int i = n; i >= 0; --i) a[i] = a[i + 1] + bucket[i + 1];

    std::vector<std::vector<Fixed>> a_comp(comp_size.size());
    for (std::size_t k = 0; k < comp_size.size(); ++k) {
        a_comp[k].assign(comp_size[k] + 2, 0);
    }
    for (int x = 0; x < n; ++x) {
        if (comp[x] < 0) continue;
        long long key = static_cast<long long>(dist_s[x]) - dist_c[x];
        if (key >= 1) {
            auto& ac = a_comp[comp[x]];
            ac[std::min<long long>(key, static_cast<long long>(ac.size()) - 1)] += cost[x];
        }
    }
    for (auto& ac : a_comp) {
        for (int i = static_cast<int>(ac.size()) - 2; i >= 0; --i) ac[i] += ac[i + 1];
        // ac[i] now holds the suffix sum over keys >= i; shift to "> i".
        for (std::size_t i = 0; i + 1 < ac.size(); ++i) ac[i] = ac[i + 1];
    }

    std::vector<Fixed> beta(n, 0);
    for (int v = 0; v < n; ++v) {
        if (v == c) continue;
        int d = dist_c[v];
        const auto& ac = a_comp[comp[v]];
        Fixed inside = d < static_cast<int>(ac.size()) ? ac[d] : 0;
        beta[v] = a[d] - inside;
    }
    return beta;
}

struct GammaRecord {
    Fixed value = 0;
    int site = -1;
    int comp = -1;
};

std::vector<Fixed> local_gamma(const LocalTree& t, int c, std::span<const Fixed> cost,
                               std::span<const int> sites, const LocalVoronoi& vor,
                               const std::vector<int>& dist_c, const std::vector<int>& comp) {
    const int n = t.n;
    const int owner_c = vor.owner[c];
    std::vector<Fixed> lam = vor.loads;

    std::vector<std::vector<int>> bucket(n + 1);
    for (int x = 0; x < n; ++x) {
        if (x == c) continue;
        long long key = static_cast<long long>(vor.dist[x]) - dist_c[x];
        if (key >= 1) {
            if (vor.owner[x] != owner_c) lam[vor.owner[x]] -= cost[x];
            if (key <= n) bucket[key].push_back(x);
        }
    }

    auto site_comp = [&](int i) { return comp[sites[i]]; };
    std::vector<GammaRecord> best(n + 1), second(n + 1);
    std::vector<int> cand;
    cand.reserve(sites.size());
    for (int j = 0; j <= n; ++j) {
        if (j == 0) {
            cand.clear();
            for (std::size_t i = 0; i < sites.size(); ++i) {
                if (static_cast<int>(i) != owner_c) cand.push_back(static_cast<int>(i));
            }
        } else {
            cand.clear();
            for (int x : bucket[j]) {
                int i = vor.owner[x];
                if (i != owner_c) {
                    lam[i] += cost[x];
                    cand.push_back(i);
                }
            }
            if (best[j - 1].site >= 0) cand.push_back(best[j - 1].site);
        }
        GammaRecord b;
        for (int i : cand) {
            if (b.site < 0 || lam[i] > b.value) b = {lam[i], i, site_comp(i)};
        }
        best[j] = b;
        GammaRecord b2;
        if (b.site >= 0) {
            if (j > 0 && second[j - 1].site >= 0) cand.push_back(second[j - 1].site);
            for (int i : cand) {
                if (site_comp(i) == b.comp) continue;
                if (b2.site < 0 || lam[i] > b2.value) b2 = {lam[i], i, site_comp(i)};
            }
        }
        second[j] = b2;
    }

    std::vector<Fixed> gamma(n, 0);
    for (int v = 0; v < n; ++v) {
        if (v == c) continue;
        int j = dist_c[v];
        const auto& b = best[j];
        if (b.site < 0) continue;
        if (b.comp != comp[v]) {
            gamma[v] = b.value;
        } else if (second[j].site >= 0) {
            gamma[v] = second[j].value;
        }
    }
    return gamma;
}

struct Frame {
    LocalTree tree;
    std::vector<Vertex> global;  // local id -> input vertex
    std::vector<Fixed> cost;
    std::vector<int> sites;  // local ids in priority order
    std::vector<Fixed> lambda, carried_max;
};

struct SolveContext {
    const TreeSolveOptions* options;
    TreeSolveStats* stats;
    std::vector<Fixed>* result;  // R(v) per input vertex
};

// R(v) for one explicit candidate, by direct diagram evaluation.
Fixed direct_value(const Frame& f, int v) {
    std::vector<int> extended = f.sites;
    extended.push_back(v);
    auto vor = local_voronoi(f.tree, f.cost, extended);
    Fixed r = std::max(f.lambda[v] + vor.loads.back(), f.carried_max[v]);
    for (std::size_t i = 0; i + 1 < vor.loads.size(); ++i) r = std::max(r, vor.loads[i]);
    return r;
}

void check_frame_identities(const Frame& parent, const LocalVoronoi& vor, const Frame& child,
                            const std::vector<int>& to_parent) {
    // The carried values must make the child subproblem agree with the
    // parent: lambda + own-load and the running max of foreign loads are
    // both preserved for every candidate.
    for (int lv = 0; lv < child.tree.n; ++lv) {
        int pv = to_parent[lv];
        bool is_site = false;
        for (int s : child.sites) is_site |= (s == lv);
        for (int s : parent.sites) is_site |= (s == pv);
        if (is_site) continue;

        std::vector<int> ext_parent = parent.sites;
        ext_parent.push_back(pv);
        auto pw = local_voronoi(parent.tree, parent.cost, ext_parent);
        std::vector<int> ext_child = child.sites;
        ext_child.push_back(lv);
        auto cw = local_voronoi(child.tree, child.cost, ext_child);

        Fixed lhs_own = parent.lambda[pv] + pw.loads.back();
        Fixed rhs_own = child.lambda[lv] + cw.loads.back();
        if (lhs_own != rhs_own) {
            throw Error("tree recursion identity violated (territory side)");
        }
        Fixed lhs_rest = parent.carried_max[pv];
        for (std::size_t i = 0; i + 1 < pw.loads.size(); ++i) {
            lhs_rest = std::max(lhs_rest, pw.loads[i]);
        }
        Fixed rhs_rest = child.carried_max[lv];
        for (std::size_t i = 0; i + 1 < cw.loads.size(); ++i) {
            rhs_rest = std::max(rhs_rest, cw.loads[i]);
        }
        if (lhs_rest != rhs_rest) {
            throw Error("tree recursion identity violated (foreign-site side)");
        }
        (void)vor;
    }
}

void solve_frame(Frame&& f, SolveContext& ctx, int depth) {
    if (ctx.stats) {
        ctx.stats->max_depth = std::max(ctx.stats->max_depth, depth);
        if (!f.sites.empty()) {
            ctx.stats->max_site_depth = std::max(ctx.stats->max_site_depth, depth);
        }
    }
    const int n = f.tree.n;
    std::vector<char> is_site(n, 0);
    for (int s : f.sites) is_site[s] = 1;
    int candidate_count = n - static_cast<int>(f.sites.size());
    if (candidate_count == 0) return;

    if (f.sites.empty()) {
        Fixed total = std::accumulate(f.cost.begin(), f.cost.end(), Fixed(0));
        for (int v = 0; v < n; ++v) {
            (*ctx.result)[f.global[v]] = std::max(f.lambda[v] + total, f.carried_max[v]);
        }
        return;
    }
    if (candidate_count == 1) {
        for (int v = 0; v < n; ++v) {
            if (!is_site[v]) (*ctx.result)[f.global[v]] = direct_value(f, v);
        }
        return;
    }

    auto vor = local_voronoi(f.tree, f.cost, f.sites);

    int c;
    if (ctx.options->site_weighted_centroid) {
        std::vector<std::int64_t> w(n, 0);
        for (int s : f.sites) w[s] = 1;
        c = local_centroid(f.tree, w);
    } else {
        std::vector<std::int64_t> w(n, 1);
        c = local_centroid(f.tree, w);
    }
    if (!is_site[c]) (*ctx.result)[f.global[c]] = direct_value(f, c);

    const int owner_c = vor.owner[c];
    const int s_c = f.sites[owner_c];

    // alpha against the owning site, restricted to its territory.
    std::vector<Fixed> masked(n, 0);
    for (int v = 0; v < n; ++v) {
        if (vor.owner[v] == owner_c) masked[v] = f.cost[v];
    }
    auto alpha = local_alpha(f.tree, s_c, masked);

    // Costs of the processed territory are spent; zero them from now on.
    std::vector<Fixed> pruned = f.cost;
    for (int v = 0; v < n; ++v) {
        if (vor.owner[v] == owner_c) pruned[v] = 0;
    }

    auto dist_c = local_bfs(f.tree, c);
    std::vector<int> comp_size;
    auto comp = split_components(f.tree, c, comp_size);
    auto beta = local_beta(f.tree, c, pruned, vor.dist, dist_c, comp, comp_size);
    auto gamma = local_gamma(f.tree, c, f.cost, f.sites, vor, dist_c, comp);

    const int comps = static_cast<int>(comp_size.size());
    std::vector<std::vector<int>> members(comps);
    for (int k = 0; k < comps; ++k) members[k].reserve(comp_size[k]);
    for (int v = 0; v < n; ++v) {
        if (v != c) members[comp[v]].push_back(v);  // ascending: relabel stays sorted
    }

    for (int k = 0; k < comps; ++k) {
        Frame child;
        const auto& verts = members[k];
        const int m = static_cast<int>(verts.size());
        std::vector<int> to_child(n, -1);
        for (int i = 0; i < m; ++i) to_child[verts[i]] = i;

        child.tree.n = m;
        child.tree.off.assign(m + 1, 0);
        for (int i = 0; i < m; ++i) {
            for (int u : f.tree.neighbors(verts[i])) {
                if (u != c) child.tree.adj.push_back(to_child[u]);
            }
            child.tree.off[i + 1] = static_cast<int>(child.tree.adj.size());
        }
        child.global.resize(m);
        child.cost.resize(m);
        child.lambda.resize(m);
        child.carried_max.resize(m);
        for (int i = 0; i < m; ++i) {
            int v = verts[i];
            child.global[i] = f.global[v];
            child.cost[i] = pruned[v];
            child.lambda[i] = f.lambda[v] + alpha[v] + beta[v];
            child.carried_max[i] =
                std::max({f.carried_max[v], vor.loads[owner_c] - alpha[v], gamma[v]});
        }
        for (int s : f.sites) {
            if (s != s_c && comp[s] == k) child.sites.push_back(to_child[s]);
        }

        if (ctx.options->check_invariants) {
            check_frame_identities(f, vor, child, verts);
        }
        solve_frame(std::move(child), ctx, depth + 1);
    }
}

}  // namespace

RootedTreeIndex RootedTreeIndex::build(const Graph& tree, Vertex root,
                                       std::span<const Fixed> costs) {
    if (!is_tree(tree)) throw Error("not a tree");
    auto t = local_from_graph(tree);
    auto idx = LocalRootedIndex::build(t, root, costs);
    RootedTreeIndex out;
    out.root = root;
    out.parent = std::move(idx.parent);
    out.depth = std::move(idx.depth);
    out.bfs_order = std::move(idx.order);
    out.subtree_cost = std::move(idx.subtree_cost);
    out.up = std::move(idx.up);
    return out;
}

Vertex RootedTreeIndex::ancestor_at_depth(Vertex v, int target_depth) const {
    if (target_depth < 0 || target_depth > depth[v]) {
        throw Error("ancestor depth out of range");
    }
    int hops = depth[v] - target_depth;
    for (int j = 0; hops > 0; ++j, hops >>= 1) {
        if (hops & 1) v = up[j][v];
    }
    return v;
}

Vertex centroid(const Graph& tree, std::span<const std::int64_t> node_weights) {
    if (!is_tree(tree)) throw Error("not a tree");
    std::int64_t total = 0;
    for (auto w : node_weights) {
        if (w < 0) throw Error("centroid weights must be nonnegative");
        total += w;
    }
    if (total <= 0) throw Error("centroid weights must sum to a positive value");
    return local_centroid(local_from_graph(tree), node_weights);
}

std::vector<Fixed> alpha_all(const Graph& tree, Vertex s, std::span<const Fixed> costs) {
    if (!is_tree(tree)) throw Error("not a tree");
    return local_alpha(local_from_graph(tree), s, costs);
}

std::vector<Fixed> beta_all(const Graph& tree, Vertex c, const SiteList& s,
                            std::span<const Fixed> costs) {
    if (!is_tree(tree)) throw Error("not a tree");
    auto t = local_from_graph(tree);
    auto dist_s = [&] {
        std::vector<int> d(t.n, -1);
        std::vector<int> queue;
        for (Vertex site : s.vertices()) {
            d[site] = 0;
            queue.push_back(site);
        }
        for (std::size_t head = 0; head < queue.size(); ++head) {
            int v = queue[head];
            for (int u : t.neighbors(v)) {
                if (d[u] < 0) {
                    d[u] = d[v] + 1;
                    queue.push_back(u);
                }
            }
        }
        return d;
    }();
    auto dist_c = local_bfs(t, c);
    std::vector<int> comp_size;
    auto comp = split_components(t, c, comp_size);
    return local_beta(t, c, costs, dist_s, dist_c, comp, comp_size);
}

std::vector<Fixed> gamma_all(const Graph& tree, Vertex c, const SiteList& s,
                             std::span<const Fixed> costs) {
    if (!is_tree(tree)) throw Error("not a tree");
    auto t = local_from_graph(tree);
    std::vector<int> sites(s.vertices().begin(), s.vertices().end());
    auto vor = local_voronoi(t, costs, sites);
    auto dist_c = local_bfs(t, c);
    std::vector<int> comp_size;
    auto comp = split_components(t, c, comp_size);
    return local_gamma(t, c, costs, sites, vor, dist_c, comp);
}

SolveResult solve_tree(const Graph& g, const CostVector& costs, const SiteList& s,
                       const TreeSolveOptions& options, TreeSolveStats* stats) {
    if (!is_tree(g)) throw PreconditionError("graph is not a tree");
    if (s.size() == 0) throw Error("no sites");
    const int n = g.vertex_count();
    if (s.size() >= n) throw Error("no candidate vertex: every vertex is a site");

    Frame top;
    top.tree = local_from_graph(g);
    top.global.resize(n);
    std::iota(top.global.begin(), top.global.end(), 0);
    top.cost.assign(costs.values().begin(), costs.values().end());
    top.sites.assign(s.vertices().begin(), s.vertices().end());
    top.lambda.assign(n, 0);
    top.carried_max.assign(n, 0);

    std::vector<Fixed> r(static_cast<std::size_t>(n), -1);
    SolveContext ctx{&options, stats, &r};
    solve_frame(std::move(top), ctx, 1);

    Vertex best_vertex = -1;
    Fixed best = 0;
    for (Vertex v = 0; v < n; ++v) {
        if (s.contains(v)) continue;
        if (r[v] < 0) throw Error("internal: candidate without a computed value");
        if (best_vertex < 0 || r[v] < best) {
            best_vertex = v;
            best = r[v];
        }
    }
    return finalize_result(g, costs, s, best_vertex, best);
}

}  // namespace bvx
