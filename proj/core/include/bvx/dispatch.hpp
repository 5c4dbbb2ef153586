#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "bvx/io.hpp"
#include "bvx/voronoi.hpp"

namespace bvx {

enum class Algorithm {
    Auto,
    Brute,
    Clique,
    DiameterTwo,
    Path,
    Cycle,
    Tree,
    Treewidth,
    ProperInterval,
};

Algorithm algorithm_from_name(const std::string& name);
std::string algorithm_name(Algorithm a);

struct SolveOptions {
    Algorithm algorithm = Algorithm::Auto;
    bool assume_diameter_two = false;
    // Full diameter verification runs only when n*m stays within budget.
    std::uint64_t diameter_check_budget = 100'000'000;
};

struct SolveOutcome {
    SolveResult result;
    std::string algorithm;  // what actually ran
    bool certified = false; // witness recomputation matched best_load
    double wall_ms = 0.0;
};

// Detection, dispatch over the specialized solvers, and independent
// certification of the answer. Throws PreconditionError when a requested
// class fails verification or certification fails.
SolveOutcome solve_instance(const ProblemInstance& inst, const SolveOptions& options = {});

std::string solve_outcome_to_json(const SolveOutcome& outcome);
std::string voronoi_to_json(const Graph& g, const SiteList& sites, const VoronoiDiagram& d);

struct DiagnosticEntry {
    std::string name;
    bool pass = false;
    std::string detail;
};

struct DiagnosticReport {
    std::vector<DiagnosticEntry> entries;
    bool all_pass = true;

    void add(const std::string& name, bool pass, const std::string& detail = "");
};

// Structural checks of a (possibly corrupted) diagram against per-site
// distances: partition, priority rule, territory connectivity.
DiagnosticReport validate_diagram(const Graph& g, const CostVector& costs, const SiteList& sites,
                                  const VoronoiDiagram& diagram);

// Full instance diagnostics, including the all-pairs interval checks when
// the instance is small enough for them.
DiagnosticReport validate_instance(const ProblemInstance& inst, int all_pairs_vertex_budget = 600);

std::string report_to_json(const DiagnosticReport& report);

}  // namespace bvx
