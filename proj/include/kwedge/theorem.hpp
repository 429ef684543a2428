#pragma once

#include <cstdint>

#include "kwedge/integer_set.hpp"

namespace kwedge {

/// Exact verdict on (k+1)|(k+1)^A| <= (n-k)|k^A|, kept as the two
/// cross-products so no division (and no floating point) ever happens.
struct RatioVerdict {
    IntegerSet set;
    int k = 0;
    std::uint64_t size_k = 0;
    std::uint64_t size_k1 = 0;
    std::int64_t lhs_cross = 0;  // (k+1) * |(k+1)^A|
    std::int64_t rhs_cross = 0;  // (n-k) * |k^A|
    bool holds = false;
    bool equality = false;
    bool hyp_theorem = false;   // n >= (k^2+7k)/2
    bool hyp_question = false;  // n > 2k
};

/// Requires 1 <= k <= n-1.
RatioVerdict ratio_check(const IntegerSet& A, int k);

inline bool theorem_hypothesis(int n, int k) {
    return 2 * static_cast<std::int64_t>(n) >=
           static_cast<std::int64_t>(k) * k + 7 * static_cast<std::int64_t>(k);
}

inline bool question_hypothesis(int n, int k) { return n > 2 * k; }

} // namespace kwedge
