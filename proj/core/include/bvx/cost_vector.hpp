#pragma once

#include <span>
#include <vector>

#include "bvx/fixed.hpp"
#include "bvx/graph.hpp"

namespace bvx {

// Per-vertex nonnegative costs with the exact total cached.
class CostVector {
public:
    static CostVector from_raw(std::vector<Fixed> values);
    static CostVector uniform(int n, Fixed value);
    // Convenience for tests and generators: plain integers, scaled by 10^6.
    static CostVector from_integers(const std::vector<long long>& values);

    int size() const { return static_cast<int>(values_.size()); }
    Fixed at(Vertex v) const { return values_[v]; }
    Fixed total() const { return total_; }
    std::span<const Fixed> values() const { return values_; }

private:
    CostVector() = default;

    std::vector<Fixed> values_;
    Fixed total_ = 0;
};

}  // namespace bvx
