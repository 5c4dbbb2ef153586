#include "bvx/range_tree.hpp"

#include <algorithm>
#include <limits>
#include <string>

#include "bvx/error.hpp"

namespace bvx {

KRangeTree KRangeTree::build(const std::vector<std::vector<std::int64_t>>& points,
                             const std::vector<Fixed>& weights) {
    if (points.size() != weights.size()) {
        throw Error("range tree: point and weight counts differ");
    }
    KRangeTree t;
    t.size_ = points.size();
    if (points.empty()) return t;

    t.k_ = static_cast<int>(points.front().size());
    if (t.k_ < 1) throw Error("range tree: dimension must be at least 1");
    for (const auto& p : points) {
        if (static_cast<int>(p.size()) != t.k_) {
            throw Error("range tree: mixed point dimensions");
        }
    }
    t.points_ = points;
    t.weights_ = weights;
    for (Fixed w : weights) t.total_ += w;

    std::vector<int> items(points.size());
    for (std::size_t i = 0; i < items.size(); ++i) items[i] = static_cast<int>(i);
    t.root_ = t.build_dim(std::move(items), 0);
    return t;
}

int KRangeTree::build_dim(std::vector<int> items, int dim) {
    std::sort(items.begin(), items.end(), [&](int a, int b) {
        return points_[a][dim] < points_[b][dim];
    });

    const int id = static_cast<int>(nodes_.size());
    nodes_.emplace_back();

    if (dim == k_ - 1) {
        auto& node = nodes_[id];
        node.coords.reserve(items.size());
        node.prefix.reserve(items.size() + 1);
        node.prefix.push_back(0);
        for (int i : items) {
            node.coords.push_back(points_[i][dim]);
            node.prefix.push_back(node.prefix.back() + weights_[i]);
        }
        node.split = node.coords.front();  // reused as min; max is coords.back()
        return id;
    }

    {
        auto& node = nodes_[id];
        node.coords = {points_[items.front()][dim], points_[items.back()][dim]};
    }
    int sub = build_dim(items, dim + 1);
    nodes_[id].sub = sub;
    if (items.size() > 1) {
        std::size_t mid = items.size() / 2;
        int left = build_dim(std::vector<int>(items.begin(), items.begin() + mid), dim);
        int right = build_dim(std::vector<int>(items.begin() + mid, items.end()), dim);
        nodes_[id].left = left;
        nodes_[id].right = right;
    }
    return id;
}

Fixed KRangeTree::query(const std::vector<DimBound>& bounds) const {
    if (size_ == 0) return 0;
    if (static_cast<int>(bounds.size()) != k_) {
        throw Error("range tree: query has " + std::to_string(bounds.size()) +
                    " bounds for a " + std::to_string(k_) + "-dimensional tree");
    }
    constexpr auto kMin = std::numeric_limits<std::int64_t>::min();
    constexpr auto kMax = std::numeric_limits<std::int64_t>::max();
    std::vector<std::int64_t> lo(k_, kMin), hi(k_, kMax);
    for (int d = 0; d < k_; ++d) {
        if (bounds[d].lower) {
            lo[d] = *bounds[d].lower;
            if (bounds[d].lower_strict) {
                if (lo[d] == kMax) return 0;
                ++lo[d];
            }
        }
        if (bounds[d].upper) {
            hi[d] = *bounds[d].upper;
            if (bounds[d].upper_strict) {
                if (hi[d] == kMin) return 0;
                --hi[d];
            }
        }
        if (lo[d] > hi[d]) return 0;
    }
    return query_node(root_, 0, lo, hi);
}

Fixed KRangeTree::query_node(int id, int dim, const std::vector<std::int64_t>& lo,
                             const std::vector<std::int64_t>& hi) const {
    const Node& node = nodes_[id];
    if (dim == k_ - 1) {
        auto from = std::lower_bound(node.coords.begin(), node.coords.end(), lo[dim]);
        auto to = std::upper_bound(node.coords.begin(), node.coords.end(), hi[dim]);
        return node.prefix[to - node.coords.begin()] - node.prefix[from - node.coords.begin()];
    }
    std::int64_t min_c = node.coords[0], max_c = node.coords[1];
    if (hi[dim] < min_c || lo[dim] > max_c) return 0;
    if (lo[dim] <= min_c && max_c <= hi[dim]) return query_node(node.sub, dim + 1, lo, hi);
    return query_node(node.left, dim, lo, hi) + query_node(node.right, dim, lo, hi);
}

}  // namespace bvx
