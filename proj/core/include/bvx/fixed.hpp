#pragma once

#include <cstdint>
#include <string>

namespace bvx {

// Costs and loads are exact fixed-point numbers: decimal inputs are scaled
// by 10^6 and kept in 64-bit integers, so sums and comparisons are exact.
using Fixed = std::int64_t;

inline constexpr Fixed kFixedOne = 1'000'000;
inline constexpr int kFixedFractionDigits = 6;

// Largest admissible total cost of an instance. Anything above risks
// overflow in intermediate sums and is rejected at construction time.
inline constexpr Fixed kMaxTotalCost = Fixed(1) << 62;

// Parses a nonnegative decimal literal ("3", "0.25", "12.000001") into a
// fixed-point value. More than six fraction digits cannot be represented
// exactly and are rejected.
Fixed fixed_from_decimal(const std::string& text);

// Renders a fixed-point value back as a minimal decimal string.
std::string fixed_to_decimal(Fixed value);

}  // namespace bvx
