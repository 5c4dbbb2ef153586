#include "bvx/io.hpp"

#include <fstream>
#include <sstream>

#include "bvx/error.hpp"
#include "bvx/fixed.hpp"

namespace bvx {

namespace {

struct Line {
    int number;
    std::vector<std::string> tokens;
};

std::vector<Line> tokenize(const std::string& text) {
    std::vector<Line> lines;
    std::istringstream in(text);
    std::string raw;
    int number = 0;
    while (std::getline(in, raw)) {
        ++number;
        auto first = raw.find_first_not_of(" \t\r");
        if (first == std::string::npos || raw[first] == '#') continue;
        std::istringstream ls(raw);
        Line line{number, {}};
        std::string tok;
        while (ls >> tok) line.tokens.push_back(tok);
        if (!line.tokens.empty()) lines.push_back(std::move(line));
    }
    return lines;
}

[[noreturn]] void fail(int line, const std::string& message) {
    throw Error("line " + std::to_string(line) + ": " + message);
}

long long parse_int(const Line& line, const std::string& tok, long long lo, long long hi) {
    try {
        std::size_t used = 0;
        long long v = std::stoll(tok, &used);
        if (used != tok.size()) fail(line.number, "malformed integer '" + tok + "'");
        if (v < lo || v > hi) fail(line.number, "value " + tok + " out of range");
        return v;
    } catch (const Error&) {
        throw;
    } catch (const std::exception&) {
        fail(line.number, "malformed integer '" + tok + "'");
    }
}

}  // namespace

ProblemInstance parse_instance_text(const std::string& text) {
    auto lines = tokenize(text);
    if (lines.empty()) throw Error("empty instance file");

    int n = -1;
    long long m = -1;
    std::vector<std::pair<Vertex, Vertex>> edges;
    std::vector<Dist> weights;
    bool any_weight = false;
    std::vector<Fixed> costs;
    std::vector<char> cost_seen;
    std::vector<std::string> labels;
    std::vector<Vertex> sites;
    bool sites_seen = false;

    for (const auto& line : lines) {
        const auto& t = line.tokens;
        if (t[0] == "p") {
            if (n >= 0) fail(line.number, "duplicate header");
            if (t.size() != 3) fail(line.number, "header needs 'p <n> <m>'");
            n = static_cast<int>(parse_int(line, t[1], 1, 100'000'000));
            m = parse_int(line, t[2], 0, 1LL << 40);
            costs.assign(n, kFixedOne);
            cost_seen.assign(n, 0);
            labels.assign(n, "");
        } else if (t[0] == "e") {
            if (n < 0) fail(line.number, "edge before header");
            if (t.size() != 3 && t.size() != 4) fail(line.number, "edge needs 'e <u> <v> [w]'");
            auto u = static_cast<Vertex>(parse_int(line, t[1], 0, n - 1));
            auto v = static_cast<Vertex>(parse_int(line, t[2], 0, n - 1));
            Dist w = 1;
            if (t.size() == 4) {
                w = parse_int(line, t[3], 1, 1LL << 40);
                if (w != 1) any_weight = true;
            }
            edges.emplace_back(u, v);
            weights.push_back(w);
        } else if (t[0] == "c") {
            if (n < 0) fail(line.number, "cost before header");
            if (t.size() != 3 && t.size() != 4) {
                fail(line.number, "cost needs 'c <v> <decimal> [label]'");
            }
            auto v = static_cast<Vertex>(parse_int(line, t[1], 0, n - 1));
            if (cost_seen[v]) fail(line.number, "duplicate cost for vertex " + t[1]);
            cost_seen[v] = 1;
            try {
                costs[v] = fixed_from_decimal(t[2]);
            } catch (const Error& e) {
                fail(line.number, e.what());
            }
            if (t.size() == 4) labels[v] = t[3];
        } else if (t[0] == "s") {
            if (n < 0) fail(line.number, "sites before header");
            if (sites_seen) fail(line.number, "duplicate site line");
            sites_seen = true;
            for (std::size_t i = 1; i < t.size(); ++i) {
                sites.push_back(static_cast<Vertex>(parse_int(line, t[i], 0, n - 1)));
            }
        } else {
            fail(line.number, "unknown record '" + t[0] + "'");
        }
    }
    if (n < 0) throw Error("missing 'p' header");
    if (static_cast<long long>(edges.size()) != m) {
        throw Error("header declares " + std::to_string(m) + " edges, file has " +
                    std::to_string(edges.size()));
    }
    if (!sites_seen || sites.empty()) throw Error("missing or empty site line");

    ProblemInstance inst{
        any_weight ? Graph::from_weighted_edges(n, edges, weights) : Graph::from_edges(n, edges),
        CostVector::from_raw(std::move(costs)),
        SiteList::of(std::move(sites), n),
        std::nullopt,
        std::move(labels),
    };
    return inst;
}

ProblemInstance load_instance(const std::string& graph_path,
                              const std::optional<std::string>& costs_path,
                              const std::optional<std::string>& sites_path,
                              const std::optional<std::string>& td_path) {
    std::string text = read_text_file(graph_path);
    if (costs_path || sites_path) {
        // Extra files use the same record syntax and are appended logically.
        auto inst_text = text;
        if (costs_path) inst_text += "\n" + read_text_file(*costs_path);
        if (sites_path) inst_text += "\n" + read_text_file(*sites_path);
        text = inst_text;
    }
    ProblemInstance inst = parse_instance_text(text);
    if (td_path) {
        inst.decomposition = parse_tree_decomposition_text(read_text_file(*td_path),
                                                           inst.graph.vertex_count());
    }
    return inst;
}

std::string instance_to_text(const Graph& g, const CostVector& costs, const SiteList& sites,
                             const std::vector<std::string>& labels) {
    std::ostringstream out;
    out << "p " << g.vertex_count() << " " << g.edge_count() << "\n";
    for (auto [u, v] : g.edges()) {
        out << "e " << u << " " << v;
        if (g.weighted()) {
            auto nbrs = g.neighbors(u);
            for (std::size_t i = 0; i < nbrs.size(); ++i) {
                if (nbrs[i] == v) {
                    out << " " << g.edge_lengths(u)[i];
                    break;
                }
            }
        }
        out << "\n";
    }
    for (Vertex v = 0; v < g.vertex_count(); ++v) {
        out << "c " << v << " " << fixed_to_decimal(costs.at(v));
        if (static_cast<std::size_t>(v) < labels.size() && !labels[v].empty()) {
            out << " " << labels[v];
        }
        out << "\n";
    }
    out << "s";
    for (Vertex v : sites.vertices()) out << " " << v;
    out << "\n";
    return out.str();
}

TreeDecomposition parse_tree_decomposition_text(const std::string& text, int vertex_count) {
    auto lines = tokenize(text);
    TreeDecomposition td;
    int declared_bags = -1;
    for (const auto& line : lines) {
        const auto& t = line.tokens;
        if (t[0] == "s") {
            if (t.size() != 5 || t[1] != "td") fail(line.number, "header needs 's td <#bags> <max bag size> <n>'");
            declared_bags = static_cast<int>(parse_int(line, t[2], 0, 10'000'000));
            auto n = parse_int(line, t[4], 1, 100'000'000);
            if (n != vertex_count) {
                fail(line.number, "decomposition is for " + t[4] + " vertices, graph has " +
                                      std::to_string(vertex_count));
            }
            td.bags.assign(declared_bags, {});
        } else if (t[0] == "b") {
            if (declared_bags < 0) fail(line.number, "bag before header");
            if (t.size() < 2) fail(line.number, "bag needs 'b <id> <v...>'");
            auto id = static_cast<int>(parse_int(line, t[1], 1, declared_bags));
            for (std::size_t i = 2; i < t.size(); ++i) {
                td.bags[id - 1].push_back(
                    static_cast<Vertex>(parse_int(line, t[i], 0, vertex_count - 1)));
            }
        } else {
            if (declared_bags < 0) fail(line.number, "edge before header");
            if (t.size() != 2) fail(line.number, "bag-tree edge needs '<i> <j>'");
            auto a = static_cast<int>(parse_int(line, t[0], 1, declared_bags));
            auto b = static_cast<int>(parse_int(line, t[1], 1, declared_bags));
            td.bag_edges.emplace_back(a - 1, b - 1);
        }
    }
    if (declared_bags < 0) throw Error("missing 's td' header");
    return td;
}

std::string tree_decomposition_to_text(const TreeDecomposition& td, int vertex_count) {
    std::ostringstream out;
    out << "s td " << td.bags.size() << " " << td.width() + 1 << " " << vertex_count << "\n";
    for (std::size_t i = 0; i < td.bags.size(); ++i) {
        out << "b " << i + 1;
        for (Vertex v : td.bags[i]) out << " " << v;
        out << "\n";
    }
    for (auto [a, b] : td.bag_edges) out << a + 1 << " " << b + 1 << "\n";
    return out.str();
}

std::string read_text_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw Error("cannot open file: " + path);
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

void write_text_file(const std::string& path, const std::string& content) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw Error("cannot open file for writing: " + path);
    out << content;
    if (!out) throw Error("failed writing file: " + path);
}

}  // namespace bvx
