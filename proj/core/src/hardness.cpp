#include "bvx/hardness.hpp"

#include <algorithm>
#include <map>

#include <json.hpp>

#include "bvx/error.hpp"

namespace bvx {

namespace {

std::vector<std::vector<char>> set_masks(const std::vector<std::vector<int>>& sets,
                                         int universe) {
    std::vector<std::vector<char>> masks(sets.size(), std::vector<char>(universe, 0));
    for (std::size_t i = 0; i < sets.size(); ++i) {
        for (int e : sets[i]) masks[i][e] = 1;
    }
    return masks;
}

}  // namespace

void HSInstance::validate() const {
    for (const auto* list : {&a_sets, &b_sets}) {
        for (const auto& set : *list) {
            for (int e : set) {
                if (e < 0 || e >= universe_size) {
                    throw Error("hitting-set instance: element " + std::to_string(e) +
                                " outside the universe");
                }
            }
        }
    }
}

HittingSetAnswer brute_force_hitting_set(const HSInstance& inst) {
    inst.validate();
    auto masks = set_masks(inst.a_sets, inst.universe_size);
    for (std::size_t i = 0; i < inst.a_sets.size(); ++i) {
        bool hits_all = true;
        for (const auto& b : inst.b_sets) {
            bool hit = false;
            for (int e : b) {
                if (masks[i][e]) {
                    hit = true;
                    break;
                }
            }
            if (!hit) {
                hits_all = false;
                break;
            }
        }
        if (hits_all) return {true, static_cast<int>(i)};
    }
    return {false, -1};
}

HSInstance reduce_halving(const HSInstance& inst) {
    inst.validate();
    const int u = inst.universe_size;
    HSInstance out;
    out.universe_size = 2 * u + 2;
    const int x0 = 2 * u;
    const int x1 = 2 * u + 1;

    std::vector<int> copy0_universe(u), copy1_universe(u);
    for (int e = 0; e < u; ++e) {
        copy0_universe[e] = e;
        copy1_universe[e] = u + e;
    }
    for (const auto& a : inst.a_sets) {  // first copy padded with the other universe
        std::vector<int> set = copy1_universe;
        for (int e : a) set.push_back(e);
        std::sort(set.begin(), set.end());
        out.a_sets.push_back(std::move(set));
    }
    for (const auto& a : inst.a_sets) {
        std::vector<int> set = copy0_universe;
        for (int e : a) set.push_back(u + e);
        std::sort(set.begin(), set.end());
        out.a_sets.push_back(std::move(set));
    }
    for (const auto& b : inst.b_sets) {
        std::vector<int> set = b;
        set.push_back(x0);
        out.b_sets.push_back(std::move(set));
    }
    for (const auto& b : inst.b_sets) {
        std::vector<int> set;
        set.reserve(b.size() + 1);
        for (int e : b) set.push_back(u + e);
        set.push_back(x1);
        out.b_sets.push_back(std::move(set));
    }
    return out;
}

HSInstance reduce_cardinality(const HSInstance& inst, int alpha, int beta) {
    inst.validate();
    if (alpha < 2) throw Error("cardinality reduction requires alpha >= 2");

    // Equalize first-list cardinalities with dummy elements.
    std::size_t delta_max = 0, delta_min = inst.a_sets.empty() ? 0 : SIZE_MAX;
    for (const auto& a : inst.a_sets) {
        delta_max = std::max(delta_max, a.size());
        delta_min = std::min(delta_min, a.size());
    }
    HSInstance tmp;
    tmp.universe_size = inst.universe_size + static_cast<int>(delta_max - delta_min);
    tmp.b_sets = inst.b_sets;
    for (const auto& a : inst.a_sets) {
        std::vector<int> set = a;
        for (std::size_t d = 0; d < delta_max - a.size(); ++d) {
            set.push_back(inst.universe_size + static_cast<int>(d));
        }
        tmp.a_sets.push_back(std::move(set));
    }

    const long long big_delta = static_cast<long long>(delta_max);
    const long long target = static_cast<long long>(alpha) * big_delta + beta;
    const long long current = tmp.universe_size;

    HSInstance out;
    if (target > current) {
        // Grow the universe only.
        out = tmp;
        out.universe_size = static_cast<int>(target);
    } else if (target < current) {
        long long excess = current - target;  // = q * (alpha-1) + r
        long long q = excess / (alpha - 1);
        long long r = excess % (alpha - 1);
        long long x_size = alpha - 1 - r;
        long long y_size = q + 1;
        out.universe_size = static_cast<int>(current + x_size + y_size);
        out.b_sets = tmp.b_sets;
        // Y is appended to every first-list set; X only widens the universe.
        std::vector<int> y(static_cast<std::size_t>(y_size));
        for (long long i = 0; i < y_size; ++i) {
            y[i] = static_cast<int>(current + x_size + i);
        }
        for (const auto& a : tmp.a_sets) {
            std::vector<int> set = a;
            set.insert(set.end(), y.begin(), y.end());
            out.a_sets.push_back(std::move(set));
        }
    } else {
        out = tmp;  // already exact
    }
    return out;
}

HardnessGraph build_hardness_graph(const HSInstance& input) {
    input.validate();
    if (input.a_sets.size() != input.b_sets.size()) {
        throw Error("hitting-set instance: the two lists must have equal length");
    }
    HSInstance inst = reduce_cardinality(reduce_halving(input), 2, -1);

    const int n = static_cast<int>(inst.a_sets.size());
    const int u = inst.universe_size;
    const int t = (u + 1) / 2;
    if (u != 2 * t - 1 || (!inst.a_sets.empty() &&
                           static_cast<int>(inst.a_sets.front().size()) != t)) {
        throw Error("internal: cardinality reduction did not reach the target shape");
    }

    // Vertex layout: first-list sets, second-list sets, universe, s, x, y.
    const int base_b = n;
    const int base_u = 2 * n;
    const Vertex vs = 2 * n + u;
    const Vertex vx = vs + 1;
    const Vertex vy = vs + 2;
    const int total = 2 * n + u + 3;

    std::vector<std::pair<Vertex, Vertex>> edges;
    for (int i = 0; i < u; ++i) {
        for (int j = i + 1; j < u; ++j) edges.emplace_back(base_u + i, base_u + j);
        edges.emplace_back(base_u + i, vx);
        edges.emplace_back(base_u + i, vy);
    }
    edges.emplace_back(vx, vy);
    edges.emplace_back(vs, vx);
    edges.emplace_back(vs, vy);
    for (int i = 0; i < n; ++i) {
        edges.emplace_back(i, vy);
        for (int e : inst.a_sets[i]) edges.emplace_back(i, base_u + e);
    }
    for (int j = 0; j < n; ++j) {
        for (int e : inst.b_sets[j]) edges.emplace_back(base_b + j, base_u + e);
    }

    HardnessGraph out{
        Graph::from_edges(total, edges),
        CostVector::uniform(total, kFixedOne),
        SiteList::of({vs}, total),
        static_cast<Fixed>(n + t + 1) * kFixedOne,
        n,
        t,
        t > 2 && 2 * t < n + 4,
        {},
    };
    out.labels.resize(total);
    for (int i = 0; i < n; ++i) out.labels[i] = "a#" + std::to_string(i);
    for (int j = 0; j < n; ++j) out.labels[base_b + j] = "b#" + std::to_string(j);
    for (int e = 0; e < u; ++e) out.labels[base_u + e] = "u#" + std::to_string(e);
    out.labels[vs] = "s";
    out.labels[vx] = "x";
    out.labels[vy] = "y";
    return out;
}

HSInstance random_hs_instance(std::mt19937_64& rng, int n_sets, int universe_size,
                              double density) {
    HSInstance inst;
    inst.universe_size = universe_size;
    std::bernoulli_distribution pick(density);
    auto draw_list = [&] {
        std::vector<std::vector<int>> list(n_sets);
        for (auto& set : list) {
            for (int e = 0; e < universe_size; ++e) {
                if (pick(rng)) set.push_back(e);
            }
        }
        return list;
    };
    inst.a_sets = draw_list();
    inst.b_sets = draw_list();
    return inst;
}

HSInstance hs_from_json(const std::string& text) {
    nlohmann::json j;
    try {
        j = nlohmann::json::parse(text);
    } catch (const nlohmann::json::parse_error& e) {
        throw Error(std::string("invalid hitting-set JSON: ") + e.what());
    }
    if (!j.contains("universe") || !j.contains("A") || !j.contains("B")) {
        throw Error("hitting-set JSON needs keys \"universe\", \"A\", \"B\"");
    }
    // Universe labels may be arbitrary integers; remap to 0..u-1.
    std::map<long long, int> remap;
    for (const auto& e : j["universe"]) {
        long long label = e.get<long long>();
        if (!remap.emplace(label, static_cast<int>(remap.size())).second) {
            throw Error("hitting-set JSON: duplicate universe element " + std::to_string(label));
        }
    }
    HSInstance inst;
    inst.universe_size = static_cast<int>(remap.size());
    auto read_list = [&](const char* key) {
        std::vector<std::vector<int>> list;
        for (const auto& set : j[key]) {
            std::vector<int> ids;
            for (const auto& e : set) {
                auto it = remap.find(e.get<long long>());
                if (it == remap.end()) {
                    throw Error("hitting-set JSON: element outside the universe in list " +
                                std::string(key));
                }
                ids.push_back(it->second);
            }
            std::sort(ids.begin(), ids.end());
            ids.erase(std::unique(ids.begin(), ids.end()), ids.end());
            list.push_back(std::move(ids));
        }
        return list;
    };
    inst.a_sets = read_list("A");
    inst.b_sets = read_list("B");
    if (inst.a_sets.size() != inst.b_sets.size()) {
        throw Error("hitting-set JSON: the two lists must have equal length");
    }
    inst.validate();
    return inst;
}

std::string hs_to_json(const HSInstance& inst) {
    nlohmann::json j;
    j["universe"] = nlohmann::json::array();
    for (int e = 0; e < inst.universe_size; ++e) j["universe"].push_back(e);
    j["A"] = inst.a_sets;
    j["B"] = inst.b_sets;
    return j.dump(2);
}

}  // namespace bvx
