#include "bvx/cost_vector.hpp"

#include <string>

#include "bvx/error.hpp"

namespace bvx {

CostVector CostVector::from_raw(std::vector<Fixed> values) {
    CostVector c;
    Fixed total = 0;
    for (std::size_t v = 0; v < values.size(); ++v) {
        if (values[v] < 0) {
            throw Error("negative cost at vertex " + std::to_string(v));
        }
        if (total > kMaxTotalCost - values[v]) {
            throw Error("total cost exceeds 2^62; instance rejected");
        }
        total += values[v];
    }
    c.values_ = std::move(values);
    c.total_ = total;
    return c;
}

CostVector CostVector::uniform(int n, Fixed value) {
    return from_raw(std::vector<Fixed>(static_cast<std::size_t>(n), value));
}

CostVector CostVector::from_integers(const std::vector<long long>& values) {
    std::vector<Fixed> raw;
    raw.reserve(values.size());
    for (long long v : values) raw.push_back(static_cast<Fixed>(v) * kFixedOne);
    return from_raw(std::move(raw));
}

}  // namespace bvx
