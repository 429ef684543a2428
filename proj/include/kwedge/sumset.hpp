#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <vector>

#include "kwedge/integer_set.hpp"

namespace kwedge {

inline constexpr std::uint64_t kDefaultEnumerationThreshold = 2'000'000;

/// Multiplicities of k-sums, saturated at `cap` (a stored value of cap means
/// "at least cap" true representations). cap = 2 is the working default: it
/// is exactly enough to split sums into unique (1) vs repeated (>= 2).
struct SumMultiplicityTable {
    int k = 0;
    std::uint32_t cap = 2;
    std::vector<std::pair<std::int64_t, std::uint32_t>> entries; // sorted by sum value

    std::size_t size() const { return entries.size(); }

    /// Saturated multiplicity, 0 if the value is not a k-sum.
    std::uint32_t multiplicity_of(std::int64_t sum) const;

    std::vector<std::int64_t> keys() const;
    std::vector<std::int64_t> keys_with_multiplicity_at_least(std::uint32_t m) const;
};

/// All k-subsets of the source set, grouped under their sums.
struct RepresentationList {
    int k = 0;
    std::map<std::int64_t, std::vector<std::vector<std::int64_t>>> groups;
    std::uint64_t total_subsets = 0;
};

/// The set of sums of exactly k distinct elements of A, sorted ascending.
/// k = 0 yields {0} (the empty sum), k = n the single full sum.
///
/// Layered DP: one dense bit array per summand count, each offset to its own
/// achievable range so negative elements cost nothing extra.
std::vector<std::int64_t> ksum_set(const IntegerSet& A, int k);

/// Multiplicity table of k-sums of A (or of A \ {exclude} when given),
/// saturated at cap >= 1. With exclude set, k must be at most n-1.
SumMultiplicityTable ksum_multiplicity(const IntegerSet& A, int k, std::uint32_t cap,
                                       std::optional<std::int64_t> exclude = std::nullopt);

/// Explicit witness lists for every k-sum. Refuses to start when C(n,k)
/// exceeds the threshold; callers fall back to the multiplicity DP.
RepresentationList enumerate_representations(const IntegerSet& A, int k,
                                             std::uint64_t threshold = kDefaultEnumerationThreshold);

} // namespace kwedge
