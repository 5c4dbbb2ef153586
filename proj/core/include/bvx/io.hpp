#pragma once

#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "bvx/cost_vector.hpp"
#include "bvx/graph.hpp"
#include "bvx/treewidth.hpp"
#include "bvx/voronoi.hpp"

namespace bvx {

/*
 * Instance file format (lines starting with '#' are comments):
 *   p <n> <m>            header
 *   e <u> <v> [w]        edge, 0-indexed, optional positive integer length
 *   c <v> <decimal> [label]   vertex cost (default 1) with optional label
 *   s <v1> <v2> ...      the ordered site list (one line)
 */
struct ProblemInstance {
    Graph graph;
    CostVector costs;
    SiteList sites;
    std::optional<TreeDecomposition> decomposition;
    std::vector<std::string> labels;  // empty strings when unlabeled
};

ProblemInstance parse_instance_text(const std::string& text);
ProblemInstance load_instance(const std::string& graph_path,
                              const std::optional<std::string>& costs_path = std::nullopt,
                              const std::optional<std::string>& sites_path = std::nullopt,
                              const std::optional<std::string>& td_path = std::nullopt);

std::string instance_to_text(const Graph& g, const CostVector& costs, const SiteList& sites,
                             const std::vector<std::string>& labels = {});

// PACE-style tree decomposition: "s td <#bags> <max bag size> <n>" header,
// "b <id> <v...>" bag lines (bag ids 1-based, vertices 0-based like the
// graph format), then bag-tree edges "<i> <j>".
TreeDecomposition parse_tree_decomposition_text(const std::string& text, int vertex_count);
std::string tree_decomposition_to_text(const TreeDecomposition& td, int vertex_count);

std::string read_text_file(const std::string& path);
void write_text_file(const std::string& path, const std::string& content);

}  // namespace bvx
