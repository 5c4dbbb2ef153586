#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "bvx/fixed.hpp"

namespace bvx {

// One query constraint per dimension. Bounds are integers; a strict bound
// "> c" is rewritten internally as ">= c+1", so all arithmetic stays exact.
struct DimBound {
    std::optional<std::int64_t> lower;
    bool lower_strict = false;
    std::optional<std::int64_t> upper;
    bool upper_strict = false;
};

/*
 * Static weighted k-dimensional orthogonal range tree over integer points.
 * Answers box sum queries; duplicate points are allowed and accumulate.
 * Nested binary search per dimension, no fractional cascading.
 */
class KRangeTree {
public:
    static KRangeTree build(const std::vector<std::vector<std::int64_t>>& points,
                            const std::vector<Fixed>& weights);

    int dimension() const { return k_; }
    std::size_t size() const { return size_; }
    Fixed total_weight() const { return total_; }

    Fixed query(const std::vector<DimBound>& bounds) const;

private:
    struct Node;

    KRangeTree() = default;

    // Builds the structure for one dimension over a set of point indices.
    int build_dim(std::vector<int> items, int dim);
    Fixed query_node(int node, int dim, const std::vector<std::int64_t>& lo,
                     const std::vector<std::int64_t>& hi) const;

    int k_ = 0;
    std::size_t size_ = 0;
    Fixed total_ = 0;
    std::vector<std::vector<std::int64_t>> points_;
    std::vector<Fixed> weights_;
    std::vector<Node> nodes_;
    int root_ = -1;
};

struct KRangeTree::Node {
    // Sorted coordinate values in this node's point set for its dimension,
    // with weight prefix sums (last dimension only).
    std::vector<std::int64_t> coords;
    std::vector<Fixed> prefix;
    int left = -1, right = -1;  // children over the lower/upper half
    int sub = -1;               // next-dimension subtree over the full set
    std::int64_t split = 0;     // max coordinate of the left half
};

}  // namespace bvx
