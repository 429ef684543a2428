#pragma once

#include <cstdint>
#include <limits>

namespace kwedge {

/// min(C(n,k), cap). Exact while the value stays at or below cap; used both
/// for counts and as a cheap feasibility guard before enumerations.
inline std::uint64_t binomial_capped(std::int64_t n, std::int64_t k,
                                     std::uint64_t cap = std::numeric_limits<std::uint64_t>::max()) {
    if (k < 0 || n < 0 || k > n) return 0;
    if (k > n - k) k = n - k;
    unsigned __int128 r = 1;
    for (std::int64_t i = 1; i <= k; ++i) {
        // r * (n-k+i) stays well below 2^127 because r <= cap <= 2^64-1.
        r = r * static_cast<unsigned __int128>(n - k + i) / static_cast<unsigned __int128>(i);
        if (r > cap) return cap;
    }
    return static_cast<std::uint64_t>(r);
}

} // namespace kwedge
