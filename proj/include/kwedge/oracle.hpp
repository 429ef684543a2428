#pragma once

#include <cstdint>
#include <map>
#include <vector>

#include "kwedge/integer_set.hpp"

namespace kwedge {

inline constexpr std::uint64_t kDefaultOracleThreshold = 5'000'000;

struct OracleResult {
    std::vector<std::int64_t> sums;                      // sorted distinct k-sums
    std::map<std::int64_t, std::uint64_t> multiplicity;  // exact representation counts
};

/// Ground truth by direct iteration over all k-subsets. Deliberately shares
/// no code with the DP kernels so it can stand as an independent oracle for
/// them. Single-threaded, guarded by C(n,k) <= threshold.
OracleResult brute_force_oracle(const IntegerSet& A, int k,
                                std::uint64_t threshold = kDefaultOracleThreshold);

} // namespace kwedge
