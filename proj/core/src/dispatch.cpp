#include "bvx/dispatch.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>

#include <json.hpp>

#include "bvx/elementary.hpp"
#include "bvx/error.hpp"
#include "bvx/fixed.hpp"
#include "bvx/proper_interval.hpp"
#include "bvx/tree_solver.hpp"
#include "bvx/treewidth.hpp"

namespace bvx {

namespace {

bool is_proper_interval(const Graph& g) {
    try {
        recognize_proper_interval(g);
        return true;
    } catch (const PreconditionError&) {
        return false;
    }
}

// The separator machinery pays log-factors per extra dimension; past this
// estimate the plain quadratic scan is the better tool.
bool treewidth_route_sensible(const Graph& g, int width) {
    if (width < 0 || width > 8) return false;
    double n = g.vertex_count();
    double logn = std::max(1.0, std::log2(n));
    double predicted = n;
    for (int i = 0; i < width + 1; ++i) predicted *= logn;
    return predicted <= 2e7;
}

}  // namespace

Algorithm algorithm_from_name(const std::string& name) {
    if (name == "auto") return Algorithm::Auto;
    if (name == "brute") return Algorithm::Brute;
    if (name == "clique") return Algorithm::Clique;
    if (name == "diam2") return Algorithm::DiameterTwo;
    if (name == "path") return Algorithm::Path;
    if (name == "cycle") return Algorithm::Cycle;
    if (name == "tree") return Algorithm::Tree;
    if (name == "treewidth") return Algorithm::Treewidth;
    if (name == "proper-interval") return Algorithm::ProperInterval;
    throw Error("unknown algorithm '" + name +
                "' (auto|brute|clique|diam2|path|cycle|tree|treewidth|proper-interval)");
}

std::string algorithm_name(Algorithm a) {
    switch (a) {
        case Algorithm::Auto: return "auto";
        case Algorithm::Brute: return "brute";
        case Algorithm::Clique: return "clique";
        case Algorithm::DiameterTwo: return "diam2";
        case Algorithm::Path: return "path";
        case Algorithm::Cycle: return "cycle";
        case Algorithm::Tree: return "tree";
        case Algorithm::Treewidth: return "treewidth";
        case Algorithm::ProperInterval: return "proper-interval";
    }
    return "?";
}

SolveOutcome solve_instance(const ProblemInstance& inst, const SolveOptions& options) {
    const Graph& g = inst.graph;
    const CostVector& costs = inst.costs;
    const SiteList& sites = inst.sites;

    Algorithm chosen = options.algorithm;
    TreeDecomposition td;

    auto diam2_verified_or_assumed = [&]() -> bool {
        std::uint64_t work = static_cast<std::uint64_t>(g.vertex_count()) *
                             std::max<std::uint64_t>(1, g.edge_count());
        if (work <= options.diameter_check_budget) return has_diameter_at_most_two(g);
        if (options.assume_diameter_two) return true;
        if (options.algorithm == Algorithm::DiameterTwo) {
            throw PreconditionError(
                "diameter-2 verification exceeds the n*m budget; pass --assume-diam2 to "
                "accept the class unchecked");
        }
        return false;
    };

    if (chosen == Algorithm::Auto) {
        if (!g.weighted() && is_complete(g)) {
            chosen = Algorithm::Clique;
        } else if (is_path(g)) {
            chosen = Algorithm::Path;
        } else if (is_cycle(g)) {
            chosen = Algorithm::Cycle;
        } else if (is_tree(g)) {
            chosen = Algorithm::Tree;
        } else if (!g.weighted() && is_proper_interval(g)) {
            chosen = Algorithm::ProperInterval;
        } else if (!g.weighted() && diam2_verified_or_assumed()) {
            chosen = Algorithm::DiameterTwo;
        } else if (inst.decomposition) {
            td = *inst.decomposition;
            chosen = treewidth_route_sensible(g, td.width()) ? Algorithm::Treewidth
                                                             : Algorithm::Brute;
        } else if (g.vertex_count() <= 4096) {
            td = heuristic_tree_decomposition(g);
            chosen = treewidth_route_sensible(g, td.width()) ? Algorithm::Treewidth
                                                             : Algorithm::Brute;
        } else {
            // The elimination heuristic can fill in quadratically on large
            // unstructured graphs; not worth attempting past this size.
            chosen = Algorithm::Brute;
        }
    } else {
        switch (chosen) {
            case Algorithm::Clique:
                if (!is_complete(g)) throw PreconditionError("graph is not a clique");
                break;
            case Algorithm::Path:
                if (!is_path(g)) throw PreconditionError("graph is not a path");
                break;
            case Algorithm::Cycle:
                if (!is_cycle(g)) throw PreconditionError("graph is not a cycle");
                break;
            case Algorithm::Tree:
                if (!is_tree(g)) throw PreconditionError("graph is not a tree");
                break;
            case Algorithm::DiameterTwo:
                if (!diam2_verified_or_assumed()) {
                    throw PreconditionError("graph has diameter greater than two");
                }
                break;
            case Algorithm::ProperInterval:
                recognize_proper_interval(g);  // throws with a certificate
                break;
            case Algorithm::Treewidth:
                td = inst.decomposition ? *inst.decomposition : heuristic_tree_decomposition(g);
                validate_tree_decomposition(g, td);
                break;
            default:
                break;
        }
    }

    auto start = std::chrono::steady_clock::now();
    SolveResult result;
    switch (chosen) {
        case Algorithm::Clique: result = solve_clique(g, costs, sites); break;
        case Algorithm::Path: result = solve_path(g, costs, sites); break;
        case Algorithm::Cycle: result = solve_cycle(g, costs, sites); break;
        case Algorithm::Tree: result = solve_tree(g, costs, sites); break;
        case Algorithm::DiameterTwo: result = solve_diameter_two(g, costs, sites); break;
        case Algorithm::ProperInterval: result = solve_proper_interval(g, costs, sites); break;
        case Algorithm::Treewidth:
            if (td.bags.empty()) {
                td = inst.decomposition ? *inst.decomposition : heuristic_tree_decomposition(g);
            }
            result = solve_treewidth(g, td, costs, sites);
            break;
        default: result = brute_force_balanced_vertex(g, costs, sites); break;
    }
    auto stop = std::chrono::steady_clock::now();

    SolveOutcome outcome;
    outcome.result = std::move(result);
    outcome.algorithm = algorithm_name(chosen == Algorithm::Auto ? Algorithm::Brute : chosen);
    outcome.wall_ms = std::chrono::duration<double, std::milli>(stop - start).count();

    auto witness = witness_load(g, costs, sites, outcome.result.best_vertex);
    outcome.certified = witness.max_load == outcome.result.best_load;
    if (!outcome.certified) {
        throw PreconditionError("result failed certification: solver reported " +
                                fixed_to_decimal(outcome.result.best_load) + ", witness " +
                                fixed_to_decimal(witness.max_load));
    }
    return outcome;
}

std::string solve_outcome_to_json(const SolveOutcome& outcome) {
    nlohmann::json j;
    j["best_vertex"] = outcome.result.best_vertex;
    j["best_load"] = fixed_to_decimal(outcome.result.best_load);
    j["site_loads"] = nlohmann::json::array();
    for (const auto& [site, load] : outcome.result.site_loads) {
        j["site_loads"].push_back({{"site", site}, {"load", fixed_to_decimal(load)}});
    }
    j["certified"] = outcome.certified;
    j["algorithm"] = outcome.algorithm;
    j["wall_ms"] = outcome.wall_ms;
    return j.dump(2);
}

std::string voronoi_to_json(const Graph& g, const SiteList& sites, const VoronoiDiagram& d) {
    nlohmann::json j;
    j["owner_site"] = nlohmann::json::array();
    j["dist"] = nlohmann::json::array();
    for (Vertex v = 0; v < g.vertex_count(); ++v) {
        j["owner_site"].push_back(sites.at(d.owner[v]));
        j["dist"].push_back(d.dist[v]);
    }
    j["loads"] = nlohmann::json::array();
    for (int i = 0; i < sites.size(); ++i) {
        j["loads"].push_back({{"site", sites.at(i)}, {"load", fixed_to_decimal(d.loads[i])}});
    }
    j["max_load"] = fixed_to_decimal(d.max_load);
    return j.dump(2);
}

void DiagnosticReport::add(const std::string& name, bool pass, const std::string& detail) {
    entries.push_back({name, pass, detail});
    all_pass = all_pass && pass;
}

DiagnosticReport validate_diagram(const Graph& g, const CostVector& costs, const SiteList& sites,
                                  const VoronoiDiagram& diagram) {
    DiagnosticReport report;
    const int n = g.vertex_count();

    std::vector<std::vector<Dist>> site_dist;
    site_dist.reserve(sites.size());
    for (Vertex s : sites.vertices()) site_dist.push_back(sssp_distances(g, s));

    bool owner_ok = true;
    std::string owner_detail;
    for (Vertex v = 0; v < n && owner_ok; ++v) {
        int i = diagram.owner[v];
        if (i < 0 || i >= sites.size()) {
            owner_ok = false;
            owner_detail = "vertex " + std::to_string(v) + " has no valid owner";
            break;
        }
        Dist nearest = site_dist[0][v];
        for (int k = 1; k < sites.size(); ++k) nearest = std::min(nearest, site_dist[k][v]);
        if (site_dist[i][v] != nearest || diagram.dist[v] != nearest) {
            owner_ok = false;
            owner_detail = "vertex " + std::to_string(v) + " is not assigned a nearest site";
            break;
        }
        for (int k = 0; k < i; ++k) {
            if (site_dist[k][v] == nearest) {
                owner_ok = false;
                owner_detail = "vertex " + std::to_string(v) +
                               " skips the earlier tied site " + std::to_string(sites.at(k));
                break;
            }
        }
    }
    report.add("owner-priority", owner_ok, owner_detail);

    bool loads_ok = true;
    {
        std::vector<Fixed> expect(sites.size(), 0);
        for (Vertex v = 0; v < n; ++v) {
            int i = diagram.owner[v];
            if (i >= 0 && i < sites.size()) expect[i] += costs.at(v);
        }
        for (int i = 0; i < sites.size(); ++i) loads_ok &= expect[i] == diagram.loads[i];
        loads_ok &= diagram.max_load == *std::max_element(expect.begin(), expect.end());
    }
    report.add("load-sums", loads_ok, loads_ok ? "" : "stored loads disagree with owners");

    bool connected_ok = true;
    std::string conn_detail;
    {
        // Each territory must be reachable from its site inside itself.
        std::vector<char> seen(n, 0);
        std::vector<Vertex> stack;
        for (int i = 0; i < sites.size() && connected_ok; ++i) {
            stack.assign(1, sites.at(i));
            seen.assign(n, 0);
            seen[sites.at(i)] = 1;
            int reached = 0;
            while (!stack.empty()) {
                Vertex v = stack.back();
                stack.pop_back();
                ++reached;
                for (Vertex u : g.neighbors(v)) {
                    if (!seen[u] && diagram.owner[u] == i) {
                        seen[u] = 1;
                        stack.push_back(u);
                    }
                }
            }
            int size = 0;
            for (Vertex v = 0; v < n; ++v) size += diagram.owner[v] == i;
            if (diagram.owner[sites.at(i)] != i || reached != size) {
                connected_ok = false;
                conn_detail = "territory of site " + std::to_string(sites.at(i)) +
                              " is not connected";
            }
        }
    }
    report.add("territory-connectivity", connected_ok, conn_detail);
    return report;
}

DiagnosticReport validate_instance(const ProblemInstance& inst, int all_pairs_vertex_budget) {
    const Graph& g = inst.graph;
    const int n = g.vertex_count();
    auto diagram = prioritized_voronoi(g, inst.costs, inst.sites);
    DiagnosticReport report = validate_diagram(g, inst.costs, inst.sites, diagram);

    if (n > all_pairs_vertex_budget) {
        report.add("metric-interval", true, "skipped: instance above the all-pairs budget");
        report.add("territory-decomposition", true, "skipped: instance above the all-pairs budget");
        return report;
    }

    std::vector<std::vector<Dist>> dist(n);
    for (Vertex v = 0; v < n; ++v) dist[v] = sssp_distances(g, v);

    // Every vertex on a shortest path from v to its site shares v's owner.
    bool interval_ok = true;
    std::string interval_detail;
    for (Vertex v = 0; v < n && interval_ok; ++v) {
        Vertex sv = inst.sites.at(diagram.owner[v]);
        for (Vertex w = 0; w < n; ++w) {
            if (dist[v][sv] == dist[v][w] + dist[w][sv] && diagram.owner[w] != diagram.owner[v]) {
                interval_ok = false;
                interval_detail = "vertex " + std::to_string(w) + " lies between " +
                                  std::to_string(v) + " and its site but has another owner";
                break;
            }
        }
    }
    report.add("metric-interval", interval_ok, interval_detail);

    // The territory of an appended candidate is exactly the union of what
    // it wins from each site.
    bool struct_ok = true;
    std::string struct_detail;
    for (Vertex v = 0; v < n && struct_ok; ++v) {
        if (inst.sites.contains(v)) continue;
        auto extended = prioritized_voronoi(g, inst.costs, inst.sites.with_appended(v));
        const int new_index = inst.sites.size();
        for (Vertex u = 0; u < n; ++u) {
            Vertex su = inst.sites.at(diagram.owner[u]);
            bool expected = dist[u][v] < dist[u][su];
            bool actual = extended.owner[u] == new_index;
            if (expected != actual) {
                struct_ok = false;
                struct_detail = "candidate " + std::to_string(v) + ", vertex " +
                                std::to_string(u) + ": territory union mismatch";
                break;
            }
        }
    }
    report.add("territory-decomposition", struct_ok, struct_detail);
    return report;
}

std::string report_to_json(const DiagnosticReport& report) {
    nlohmann::json j;
    j["all_pass"] = report.all_pass;
    j["checks"] = nlohmann::json::array();
    for (const auto& e : report.entries) {
        j["checks"].push_back({{"name", e.name}, {"pass", e.pass}, {"detail", e.detail}});
    }
    return j.dump(2);
}

}  // namespace bvx
