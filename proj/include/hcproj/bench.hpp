#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace hcproj {

struct BenchRow {
    int n = 0;
    int m = 0;
    std::string mode;
    std::string rank_path;
    std::string verdict;
    int flips = 0;
    long long micros = 0;
};

/// Greedy solves on planted strongly connected instances, timed per run and
/// per rank path (component counting vs exact elimination); generation time
/// is excluded. Sizes must be ascending.
std::vector<BenchRow> bench(const std::vector<int>& sizes, int reps, std::uint64_t seed);

/// CSV with header "n,m,mode,rank_path,verdict,flips,micros".
std::string bench_csv(const std::vector<BenchRow>& rows);

} // namespace hcproj
