#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace bvx {

struct BenchRow {
    std::string suite;
    std::string algorithm;
    int n = 0;
    std::size_t m = 0;
    int sites = 0;
    int rep = 0;
    double wall_ms = 0.0;
};

struct BenchConfig {
    // Known suites: tree, brute-tree, cycle, proper-interval, partial-ktree,
    // hardness. Empty list -> empty report.
    std::vector<std::string> suites;
    std::uint64_t seed = 1;
    int reps = 3;
    // Ladder shrink for tests; 0 = full ladders.
    int max_exponent = 0;
};

std::vector<BenchRow> run_bench(const BenchConfig& config);
std::string bench_to_csv(const std::vector<BenchRow>& rows);

}  // namespace bvx
