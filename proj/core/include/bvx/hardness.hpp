#pragma once

#include <random>
#include <string>
#include <vector>

#include "bvx/cost_vector.hpp"
#include "bvx/graph.hpp"
#include "bvx/voronoi.hpp"

namespace bvx {

// Two equally long lists of subsets over a universe {0, ..., u-1}. The
// question: does some set of the first list intersect every set of the
// second?
struct HSInstance {
    int universe_size = 0;
    std::vector<std::vector<int>> a_sets;
    std::vector<std::vector<int>> b_sets;

    void validate() const;  // throws on out-of-range elements
};

struct HittingSetAnswer {
    bool exists = false;
    int witness = -1;  // index into a_sets when exists
};

HittingSetAnswer brute_force_hitting_set(const HSInstance& inst);

// Doubles the instance so every second-list set intersects exactly half of
// the second list; preserves the answer.
HSInstance reduce_halving(const HSInstance& inst);

// Pads the instance so every first-list set has the same cardinality t and
// the universe has exactly alpha * t + beta elements; preserves the answer.
// Requires alpha >= 2.
HSInstance reduce_cardinality(const HSInstance& inst, int alpha, int beta);

/*
 * Benchmark graph family: one site, unit costs, and a load threshold such
 * that (when thresholds_valid) some candidate reaches the threshold exactly
 * when the underlying instance has a hitting set. Vertices carry labels
 * ("a#i", "b#j", "u#e", "s", "x", "y") for debugging.
 */
struct HardnessGraph {
    Graph graph;
    CostVector costs;
    SiteList sites;
    Fixed threshold = 0;      // scaled, like every load
    int set_count = 0;        // post-reduction list length
    int t = 0;                // post-reduction first-list cardinality
    bool thresholds_valid = false;
    std::vector<std::string> labels;
};

// Applies both reductions (halving, then cardinality with alpha=2, beta=-1)
// and builds the graph.
HardnessGraph build_hardness_graph(const HSInstance& inst);

HSInstance random_hs_instance(std::mt19937_64& rng, int n_sets, int universe_size,
                              double density);

// {"universe": [...], "A": [[...], ...], "B": [[...], ...]}
HSInstance hs_from_json(const std::string& text);
std::string hs_to_json(const HSInstance& inst);

}  // namespace bvx
