#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "kwedge/integer_set.hpp"
#include "kwedge/theorem.hpp"

namespace kwedge {

struct SearchBest {
    IntegerSet set;
    std::uint64_t size_k = 0;
    std::uint64_t size_k1 = 0;
    std::int64_t lhs_cross = 0;
    std::int64_t rhs_cross = 0;
};

/// Outcome of one search run. `best` maximizes the exact ratio
/// |(k+1)^A| / |k^A| (cross-product comparison, ties broken by
/// lexicographically smallest set). `counterexamples` lists every evaluated
/// set with a failing ratio bound AND n > 2k, each a full replayable
/// certificate; finding one is a result, not an error. wall_time_seconds is
/// informational only and excluded from canonical serialization.
struct SearchReport {
    enum class Mode { Exhaustive, Stochastic } mode = Mode::Exhaustive;
    std::string space;
    int n = 0;
    int k = 0;
    std::int64_t universe_M = 0;        // exhaustive
    std::int64_t lo = 0, hi = 0;        // stochastic
    bool pruned = false;                // exhaustive, canonical pruning enabled
    std::uint64_t budget = 0;
    std::uint64_t steps_per_restart = 0;  // stochastic
    std::uint64_t instances_checked = 0;
    std::optional<SearchBest> best;
    std::vector<RatioVerdict> counterexamples;  // sorted by set, deduplicated
    std::optional<std::uint64_t> seed;          // present iff stochastic
    double wall_time_seconds = 0.0;
};

struct ExhaustiveParams {
    std::int64_t universe_M = 0;
    int n = 0;
    int k = 0;
    std::uint64_t budget = 50'000'000;
    /// Evaluate only affinely canonical sets (min element 1, gcd of gaps 1).
    /// Off by default; the ratio is invariant under A -> c*A + d, so the best
    /// ratio is unchanged, but instances_checked then counts evaluated sets.
    bool canonical_pruning = false;
    bool parallel = true;
};

/// Every n-subset of {1..M}, evaluated with ratio_check. Refuses to start
/// when C(M,n) exceeds the budget. The result is independent of enumeration
/// order and of the number of threads.
SearchReport exhaustive_search(const ExhaustiveParams& params);

struct StochasticParams {
    int n = 0;
    int k = 0;
    std::int64_t lo = 0;
    std::int64_t hi = 0;
    std::uint64_t seed = 0;
    std::uint64_t budget = 10'000;        // number of ratio evaluations
    std::uint64_t steps_per_restart = 0;  // 0 -> default (500)
};

/// Seeded hill climbing with restarts. A step replaces one element by a
/// fresh in-range value (distinctness preserved) and accepts iff the exact
/// ratio does not decrease. Identical params + seed give identical reports.
SearchReport stochastic_search(const StochasticParams& params);

/// min element 1 and gcd of consecutive gaps 1 (n = 1: the set {1}).
bool is_canonical_set(const std::vector<std::int64_t>& elems);

} // namespace kwedge
