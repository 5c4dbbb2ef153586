#include "bvx/proper_interval.hpp"

#include <algorithm>
#include <numeric>
#include <random>
#include <string>

#include "bvx/error.hpp"

namespace bvx {

namespace {

// LexBFS via partition refinement on doubly-linked slices. Among vertices
// with equal labels the one with the highest priority is taken first;
// slices stay sorted by priority because adjacency is scanned in priority
// order and appended in order.
std::vector<Vertex> lex_bfs(const Graph& g, const std::vector<int>& priority) {
    const int n = g.vertex_count();
    std::vector<Vertex> by_priority(n);
    for (Vertex v = 0; v < n; ++v) by_priority[n - 1 - priority[v]] = v;

    // Adjacency resorted so neighbors appear in descending priority.
    std::vector<int> sorted_off(n + 1, 0), sorted_adj(2 * g.edge_count());
    for (Vertex v = 0; v < n; ++v) sorted_off[v + 1] = sorted_off[v] + g.degree(v);
    {
        std::vector<int> cur(sorted_off.begin(), sorted_off.end() - 1);
        for (Vertex u : by_priority) {
            for (Vertex w : g.neighbors(u)) sorted_adj[cur[w]++] = u;
        }
    }

    // One slice per vertex plus one per refinement event.
    const int max_slices = n + 2 * static_cast<int>(g.edge_count()) + 2;
    std::vector<int> head(max_slices, -1), tail(max_slices, -1);
    std::vector<int> next_s(max_slices, -1), prev_s(max_slices, -1);
    std::vector<int> partner(max_slices, -1);
    std::vector<int> nxt(n, -1), prv(n, -1), slice_of(n, 0);
    int slice_count = 1, first_slice = 0;

    head[0] = by_priority.front();
    tail[0] = by_priority.back();
    for (int i = 0; i < n; ++i) {
        Vertex v = by_priority[i];
        prv[v] = i > 0 ? by_priority[i - 1] : -1;
        nxt[v] = i + 1 < n ? by_priority[i + 1] : -1;
    }

    auto detach = [&](Vertex v) {
        int s = slice_of[v];
        if (prv[v] >= 0) nxt[prv[v]] = nxt[v]; else head[s] = nxt[v];
        if (nxt[v] >= 0) prv[nxt[v]] = prv[v]; else tail[s] = prv[v];
        prv[v] = nxt[v] = -1;
    };
    auto unlink_slice = [&](int s) {
        if (prev_s[s] >= 0) next_s[prev_s[s]] = next_s[s]; else first_slice = next_s[s];
        if (next_s[s] >= 0) prev_s[next_s[s]] = prev_s[s];
    };

    std::vector<Vertex> order;
    order.reserve(n);
    std::vector<char> visited(n, 0);
    std::vector<int> touched;
    for (int round = 0; round < n; ++round) {
        Vertex v = head[first_slice];
        detach(v);
        if (head[first_slice] < 0) unlink_slice(first_slice);
        visited[v] = 1;
        order.push_back(v);

        touched.clear();
        for (int i = sorted_off[v]; i < sorted_off[v + 1]; ++i) {
            Vertex u = sorted_adj[i];
            if (visited[u]) continue;
            int s = slice_of[u];
            if (partner[s] < 0) {
                int ns = slice_count++;
                partner[s] = ns;
                touched.push_back(s);
                // Insert the refined slice right before s.
                prev_s[ns] = prev_s[s];
                next_s[ns] = s;
                if (prev_s[s] >= 0) next_s[prev_s[s]] = ns; else first_slice = ns;
                prev_s[s] = ns;
            }
            detach(u);
            int ns = partner[s];
            slice_of[u] = ns;
            if (tail[ns] < 0) {
                head[ns] = tail[ns] = u;
            } else {
                nxt[tail[ns]] = u;
                prv[u] = tail[ns];
                tail[ns] = u;
            }
        }
        for (int s : touched) {
            partner[s] = -1;
            if (head[s] < 0) unlink_slice(s);
        }
    }
    return order;
}

// Position of the furthest neighbor on each side, |N[v]| included.
struct Reach {
    std::vector<int> lo, hi;
};

Reach neighborhood_reach(const Graph& g, const std::vector<int>& pos) {
    const int n = g.vertex_count();
    Reach r;
    r.lo.resize(n);
    r.hi.resize(n);
    for (Vertex v = 0; v < n; ++v) {
        int lo = pos[v], hi = pos[v];
        for (Vertex u : g.neighbors(v)) {
            lo = std::min(lo, pos[u]);
            hi = std::max(hi, pos[u]);
        }
        r.lo[v] = lo;
        r.hi[v] = hi;
    }
    return r;
}

// Fenwick tree over sigma ranks with point updates and prefix sums.
class CostTree {
public:
    explicit CostTree(int n) : bit_(n + 1, 0) {}

    void add(int rank, Fixed delta) {
        for (; rank < static_cast<int>(bit_.size()); rank += rank & -rank) bit_[rank] += delta;
    }
    Fixed prefix(int rank) const {  // sum over ranks <= rank
        Fixed s = 0;
        for (; rank > 0; rank -= rank & -rank) s += bit_[rank];
        return s;
    }
    Fixed total() const { return prefix(static_cast<int>(bit_.size()) - 1); }

private:
    std::vector<Fixed> bit_;
};

// Binary max-heap over site indices with a position index, so keys can be
// adjusted in place.
class SiteHeap {
public:
    explicit SiteHeap(std::vector<Fixed> keys) : key_(std::move(keys)) {
        heap_.resize(key_.size());
        pos_.resize(key_.size());
        std::iota(heap_.begin(), heap_.end(), 0);
        for (std::size_t i = 0; i < heap_.size(); ++i) pos_[i] = static_cast<int>(i);
        for (int i = static_cast<int>(heap_.size()) / 2 - 1; i >= 0; --i) sift_down(i);
    }

    Fixed key(int site) const { return key_[site]; }
    Fixed max_key() const { return key_[heap_.front()]; }

    void adjust(int site, Fixed delta) {
        key_[site] += delta;
        if (delta > 0) sift_up(pos_[site]); else sift_down(pos_[site]);
    }

private:
    void swap_at(int a, int b) {
        std::swap(heap_[a], heap_[b]);
        pos_[heap_[a]] = a;
        pos_[heap_[b]] = b;
    }
    void sift_up(int i) {
        while (i > 0 && key_[heap_[i]] > key_[heap_[(i - 1) / 2]]) {
            swap_at(i, (i - 1) / 2);
            i = (i - 1) / 2;
        }
    }
    void sift_down(int i) {
        const int n = static_cast<int>(heap_.size());
        while (true) {
            int best = i;
            for (int c = 2 * i + 1; c <= 2 * i + 2 && c < n; ++c) {
                if (key_[heap_[c]] > key_[heap_[best]]) best = c;
            }
            if (best == i) return;
            swap_at(i, best);
            i = best;
        }
    }

    std::vector<Fixed> key_;
    std::vector<int> heap_;
    std::vector<int> pos_;
};

void validate_distance_formula(const Graph& g, const SigmaOrdering& sig) {
    const int n = g.vertex_count();
    auto check_from = [&](Vertex u) {
        auto d = sssp_distances(g, u);
        for (Vertex v = 0; v < n; ++v) {
            if (u == v) continue;
            Vertex a = u, b = v;
            if (sig.layer[a] > sig.layer[b]) std::swap(a, b);
            Dist expected;
            if (sig.layer[a] < sig.layer[b] && sig.sigma[b] < sig.sigma[a]) {
                expected = sig.layer[b] - sig.layer[a];
            } else {
                expected = sig.layer[b] - sig.layer[a] + 1;
            }
            if (d[v] != expected) {
                throw Error("sigma ordering failed validation at pair (" + std::to_string(u) +
                            ", " + std::to_string(v) + "): construction bug");
            }
        }
    };
    if (n <= 350) {
        for (Vertex u = 0; u < n; ++u) check_from(u);
    } else {
        std::mt19937_64 rng(0x5193ac0fULL);
        check_from(0);
        for (int i = 0; i < 23; ++i) {
            check_from(static_cast<Vertex>(rng() % n));
        }
    }
}

}  // namespace

UmbrellaOrder recognize_proper_interval(const Graph& g) {
    if (g.weighted()) {
        throw PreconditionError("proper interval recognition needs unit-length edges");
    }
    const int n = g.vertex_count();
    std::vector<int> priority(n);
    for (Vertex v = 0; v < n; ++v) priority[v] = n - 1 - v;
    auto sweep1 = lex_bfs(g, priority);
    for (int i = 0; i < n; ++i) priority[sweep1[i]] = i;
    auto sweep2 = lex_bfs(g, priority);
    for (int i = 0; i < n; ++i) priority[sweep2[i]] = i;
    auto order = lex_bfs(g, priority);

    UmbrellaOrder out;
    out.order = std::move(order);
    out.pos.resize(n);
    for (int i = 0; i < n; ++i) out.pos[out.order[i]] = i;

    auto reach = neighborhood_reach(g, out.pos);
    std::vector<char> stamp(n, 0);
    for (Vertex v = 0; v < n; ++v) {
        if (reach.hi[v] - reach.lo[v] + 1 == g.degree(v) + 1) continue;
        // Some vertex between two members of N[v] is missing from it.
        stamp[v] = 1;
        for (Vertex u : g.neighbors(v)) stamp[u] = 1;
        for (int p = reach.lo[v]; p <= reach.hi[v]; ++p) {
            Vertex u = out.order[p];
            if (!stamp[u]) {
                throw PreconditionError(
                    "not a proper interval graph: vertex " + std::to_string(u) +
                    " lies between neighbors " + std::to_string(out.order[reach.lo[v]]) +
                    " and " + std::to_string(out.order[reach.hi[v]]) + " of vertex " +
                    std::to_string(v) + " without being adjacent to it");
            }
        }
        throw Error("internal: inconsistent neighborhood span");
    }
    return out;
}

SigmaOrdering sigma_ordering(const Graph& g, const UmbrellaOrder& order) {
    const int n = g.vertex_count();
    SigmaOrdering out;
    out.layer = [&] {
        auto d = sssp_distances(g, order.first());
        return std::vector<int>(d.begin(), d.end());
    }();
    for (int i = 1; i < n; ++i) {
        if (out.layer[order.order[i]] < out.layer[order.order[i - 1]]) {
            throw Error("internal: umbrella order has non-monotone layers");
        }
    }

    // Greedy furthest-right jump table over positions.
    auto reach = neighborhood_reach(g, order.pos);
    int levels = 1;
    while ((1 << levels) < n) ++levels;
    std::vector<std::vector<int>> jump(levels);
    jump[0].resize(n);
    for (int p = 0; p < n; ++p) jump[0][p] = reach.hi[order.order[p]];
    for (int l = 1; l < levels; ++l) {
        jump[l].resize(n);
        for (int p = 0; p < n; ++p) jump[l][p] = jump[l - 1][jump[l - 1][p]];
    }
    auto advance = [&](int p, int steps) {
        for (int l = 0; steps > 0; ++l, steps >>= 1) {
            if (steps & 1) p = jump[l][p];
        }
        return p;
    };

    // Vertices whose aligned walk sits further left come first; on a meet,
    // the deeper vertex wins; within a layer the umbrella position decides.
    std::vector<Vertex> ranked(n);
    std::iota(ranked.begin(), ranked.end(), 0);
    std::sort(ranked.begin(), ranked.end(), [&](Vertex u, Vertex v) {
        int lu = out.layer[u], lv = out.layer[v];
        if (lu == lv) return order.pos[u] < order.pos[v];
        if (lu < lv) {
            int a = advance(order.pos[u], lv - lu);
            if (a != order.pos[v]) return a < order.pos[v];
            return false;  // v is deeper
        }
        int b = advance(order.pos[v], lu - lv);
        if (order.pos[u] != b) return order.pos[u] < b;
        return true;  // u is deeper
    });
    out.sigma.resize(n);
    for (int r = 0; r < n; ++r) out.sigma[ranked[r]] = r + 1;

    validate_distance_formula(g, out);
    return out;
}

std::vector<Fixed> territory_loads(const Graph& g, const SigmaOrdering& sig,
                                   const CostVector& costs, const SiteList& s,
                                   bool check_invariants) {
    const int n = g.vertex_count();
    auto vor = prioritized_voronoi(g, costs, s);
    const int depth = *std::max_element(sig.layer.begin(), sig.layer.end());

    std::vector<std::vector<Vertex>> layer_members(depth + 1);
    for (Vertex v = 0; v < n; ++v) layer_members[sig.layer[v]].push_back(v);

    std::vector<Fixed> clique_cost(depth + 1, 0);  // same-layer vertices that must join
    for (Vertex v = 0; v < n; ++v) {
        if (vor.dist[v] > 1) clique_cost[sig.layer[v]] += costs.at(v);
    }

    std::vector<Fixed> result(n, 0);
    std::vector<Fixed> half(n, 0);

    // Two symmetric sweeps: vertices on the near side (smaller layer) and
    // on the far side of each candidate's layer. Per sweep, a vertex is
    // undecided for exactly one layer index, where the sigma comparison
    // settles membership; before that it counts fully, afterwards not at
    // all.
    for (int dir = 0; dir < 2; ++dir) {
        std::vector<std::vector<Vertex>> full_on(depth + 2), full_off(depth + 2);
        std::vector<std::vector<Vertex>> fen_on(depth + 2), fen_off(depth + 2);
        for (Vertex u = 0; u < n; ++u) {
            Dist d = vor.dist[u];
            if (d < 2) continue;
            int lu = sig.layer[u];
            if (dir == 0) {
                long long fen_at = lu + d - 1;  // forward sweep, u below the layer
                if (fen_at <= depth) {
                    fen_on[static_cast<int>(fen_at)].push_back(u);
                    if (fen_at + 1 <= depth) fen_off[static_cast<int>(fen_at + 1)].push_back(u);
                }
                if (d >= 3 && lu + 1 <= depth) {
                    full_on[lu + 1].push_back(u);
                    if (fen_at <= depth) full_off[static_cast<int>(fen_at)].push_back(u);
                }
            } else {
                long long fen_at = lu - d + 1;  // backward sweep, u above the layer
                if (fen_at >= 0) {
                    fen_on[static_cast<int>(fen_at)].push_back(u);
                    if (fen_at - 1 >= 0) fen_off[static_cast<int>(fen_at - 1)].push_back(u);
                }
                if (d >= 3 && lu - 1 >= 0) {
                    full_on[lu - 1].push_back(u);
                    if (fen_at >= 0) full_off[static_cast<int>(fen_at)].push_back(u);
                }
            }
        }

        Fixed full_sum = 0;
        CostTree tree(n);
        Fixed in_tree = 0;
        for (int step = 0; step <= depth; ++step) {
            int j = dir == 0 ? step : depth - step;
            for (Vertex u : full_on[j]) full_sum += costs.at(u);
            for (Vertex u : full_off[j]) full_sum -= costs.at(u);
            for (Vertex u : fen_on[j]) {
                tree.add(sig.sigma[u], costs.at(u));
                in_tree += costs.at(u);
            }
            for (Vertex u : fen_off[j]) {
                tree.add(sig.sigma[u], -costs.at(u));
                in_tree -= costs.at(u);
            }

            if (check_invariants) {
                Fixed expect_full = 0, expect_tree = 0;
                for (Vertex u = 0; u < n; ++u) {
                    Dist d = vor.dist[u];
                    int lu = sig.layer[u];
                    if (dir == 0 ? lu >= j : lu <= j) continue;
                    Dist gap = dir == 0 ? j - lu : lu - j;
                    if (d > gap + 1) expect_full += costs.at(u);
                    if (d == gap + 1) expect_tree += costs.at(u);
                }
                if (expect_full != full_sum || expect_tree != in_tree) {
                    throw Error("territory sweep invariant violated at layer " +
                                std::to_string(j));
                }
            }

            for (Vertex v : layer_members[j]) {
                Fixed undecided = dir == 0 ? in_tree - tree.prefix(sig.sigma[v])
                                           : tree.prefix(sig.sigma[v] - 1);
                half[v] += full_sum + undecided;
            }
        }
    }

    for (Vertex v = 0; v < n; ++v) {
        if (s.contains(v)) continue;
        result[v] = half[v] + clique_cost[sig.layer[v]];
        if (vor.dist[v] == 1) result[v] += costs.at(v);
    }
    return result;
}

std::vector<Fixed> site_loads_max(const Graph& g, const SigmaOrdering& sig,
                                  const CostVector& costs, const SiteList& s,
                                  bool check_invariants) {
    const int n = g.vertex_count();
    auto vor = prioritized_voronoi(g, costs, s);
    const int depth = *std::max_element(sig.layer.begin(), sig.layer.end());

    std::vector<std::vector<Vertex>> layer_members(depth + 1);
    for (Vertex v = 0; v < n; ++v) layer_members[sig.layer[v]].push_back(v);

    // key(site) tracks the load after losing every vertex that must join a
    // new site at the scanned layer; frontier vertices flip around the scan.
    std::vector<std::vector<Vertex>> key_sub(depth + 1), key_add(depth + 1);
    std::vector<std::vector<Vertex>> frontier_below(depth + 1), frontier_above(depth + 1);
    for (Vertex u = 0; u < n; ++u) {
        Dist d = vor.dist[u];
        if (d < 2) continue;
        int lu = sig.layer[u];
        long long start = std::max<long long>(0, lu - d + 2);
        key_sub[static_cast<int>(start)].push_back(u);
        long long stop = static_cast<long long>(lu) + d - 1;
        if (stop <= depth) key_add[static_cast<int>(stop)].push_back(u);

        long long below_at = static_cast<long long>(lu) + d - 1;
        if (below_at <= depth) frontier_below[static_cast<int>(below_at)].push_back(u);
        long long above_at = static_cast<long long>(lu) - d + 1;
        if (above_at >= 0) frontier_above[static_cast<int>(above_at)].push_back(u);
    }

    SiteHeap heap(vor.loads);
    std::vector<Fixed> result(n, 0);
    std::vector<Vertex> scan;
    for (int j = 0; j <= depth; ++j) {
        for (Vertex u : key_sub[j]) heap.adjust(vor.owner[u], -costs.at(u));
        for (Vertex u : key_add[j]) heap.adjust(vor.owner[u], costs.at(u));

        if (check_invariants) {
            for (int i = 0; i < s.size(); ++i) {
                Fixed expect = vor.loads[i];
                for (Vertex u = 0; u < n; ++u) {
                    if (vor.owner[u] != i) continue;
                    long long gap = std::abs(static_cast<long long>(j) - sig.layer[u]);
                    if (vor.dist[u] > gap + 1) expect -= costs.at(u);
                }
                if (heap.key(i) != expect) {
                    throw Error("site-key invariant violated at layer " + std::to_string(j));
                }
            }
        }

        for (Vertex u : frontier_below[j]) heap.adjust(vor.owner[u], -costs.at(u));

        scan.clear();
        scan.insert(scan.end(), frontier_below[j].begin(), frontier_below[j].end());
        scan.insert(scan.end(), frontier_above[j].begin(), frontier_above[j].end());
        scan.insert(scan.end(), layer_members[j].begin(), layer_members[j].end());
        std::sort(scan.begin(), scan.end(),
                  [&](Vertex a, Vertex b) { return sig.sigma[a] < sig.sigma[b]; });

        for (Vertex u : scan) {
            if (sig.layer[u] < j) {
                heap.adjust(vor.owner[u], costs.at(u));
            } else if (sig.layer[u] > j) {
                heap.adjust(vor.owner[u], -costs.at(u));
            } else if (!s.contains(u)) {
                bool adjacent_site = vor.dist[u] == 1;
                if (adjacent_site) heap.adjust(vor.owner[u], -costs.at(u));
                result[u] = heap.max_key();
                if (adjacent_site) heap.adjust(vor.owner[u], costs.at(u));
            }
        }

        for (Vertex u : frontier_above[j]) heap.adjust(vor.owner[u], costs.at(u));
    }
    return result;
}

SolveResult solve_proper_interval(const Graph& g, const CostVector& costs, const SiteList& s) {
    if (s.size() == 0) throw Error("no sites");
    if (s.size() >= g.vertex_count()) throw Error("no candidate vertex: every vertex is a site");
    auto order = recognize_proper_interval(g);
    auto sig = sigma_ordering(g, order);
    auto own = territory_loads(g, sig, costs, s);
    auto former = site_loads_max(g, sig, costs, s);

    Vertex best_vertex = -1;
    Fixed best = 0;
    for (Vertex v = 0; v < g.vertex_count(); ++v) {
        if (s.contains(v)) continue;
        Fixed load = std::max(own[v], former[v]);
        if (best_vertex < 0 || load < best) {
            best_vertex = v;
            best = load;
        }
    }
    return finalize_result(g, costs, s, best_vertex, best);
}

}  // namespace bvx
