#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "kwedge/integer_set.hpp"
#include "kwedge/sumset.hpp"

namespace kwedge {

/// Edge u_s -> v_t of the bipartite extension graph. Present in G when s has
/// at least one representation avoiding a = t - s; flagged in_H when two
/// distinct representations of s both avoid a.
struct ExtensionEdge {
    std::int64_t s = 0;
    std::int64_t t = 0;
    bool in_H = false;

    bool operator==(const ExtensionEdge&) const = default;
};

/// Bipartite graph between k-sums (side U) and (k+1)-sums (side V), with the
/// repeated-representation subgraph H flagged per edge. S_set / T_set are the
/// sums with at least two representations on each side.
struct ExtensionGraph {
    int k = 0;
    std::vector<std::int64_t> U;            // sorted k-sums
    std::vector<std::int64_t> V;            // sorted (k+1)-sums
    std::vector<ExtensionEdge> edges;       // sorted lexicographically by (s, t)
    std::vector<std::int64_t> S_set;        // k-sums with multiplicity >= 2
    std::vector<std::int64_t> T_set;        // (k+1)-sums with multiplicity >= 2

    std::int64_t e_G() const { return static_cast<std::int64_t>(edges.size()); }
    std::int64_t e_H() const;

    bool operator==(const ExtensionGraph&) const = default;
};

enum class GraphBuildStrategy {
    ExclusionDp,      // n multiplicity-DP passes, one per excluded element
    Representations,  // from the explicit representation lists (small instances)
};

struct GraphBuildOptions {
    GraphBuildStrategy strategy = GraphBuildStrategy::ExclusionDp;
    bool parallel = true;  // exclusion passes are independent; OpenMP across them
    std::uint64_t enumeration_threshold = kDefaultEnumerationThreshold;
};

/// Builds G and H for (A, k), 0 <= k <= n-1. Both strategies produce
/// identical graphs; the representation route exists as a cross-check and is
/// subject to the enumeration threshold.
ExtensionGraph build_extension_graph(const IntegerSet& A, int k,
                                     const GraphBuildOptions& options = {});

/// Per-vertex G/H degrees, aligned with g.U and g.V, plus the minima over
/// the repeated-representation subsets that the counting bounds care about.
struct DegreeProfile {
    std::vector<std::int64_t> dG_u, dH_u;
    std::vector<std::int64_t> dG_v, dH_v;
    std::optional<std::int64_t> min_dG_over_S, min_dH_over_S;
    std::optional<std::int64_t> min_dG_over_T, min_dH_over_T;
};

DegreeProfile degree_profile(const ExtensionGraph& g);

/// One named inequality over the graph. lhs/rhs are recomputable from the
/// graph and tables alone; a failed check always carries a witness vertex.
struct CheckResult {
    std::string name;
    std::int64_t lhs = 0;
    std::int64_t rhs = 0;
    bool holds = false;
    std::optional<std::int64_t> witness;
};

/// The target ratio bound in cross-multiplied integer form:
/// (k+1)|(k+1)^A| <= (n-k)|k^A|. `applicable` mirrors the n >= (k^2+7k)/2
/// hypothesis; when it is false a failing conclusion is data, not an error.
struct ConclusionResult {
    std::int64_t lhs_cross = 0;
    std::int64_t rhs_cross = 0;
    bool holds = false;
    bool applicable = false;
};

struct VerificationReport {
    IntegerSet set;
    int k = 0;
    std::uint64_t size_k = 0;   // |U|
    std::uint64_t size_k1 = 0;  // |V|
    std::uint64_t s_size = 0;   // |S|
    std::uint64_t t_size = 0;   // |T|
    std::int64_t e_G = 0;
    std::int64_t e_H = 0;
    std::vector<CheckResult> checks;  // the seven counting inequalities, in proof order
    ConclusionResult conclusion;
    bool hyp_theorem = false;   // n >= (k^2+7k)/2
    bool hyp_question = false;  // n > 2k

    bool all_checks_pass() const;
};

/// The seven chain checks, separated out so tests can run them against
/// doctored graphs and exercise the witness paths.
std::vector<CheckResult> run_chain_checks(const ExtensionGraph& g, const DegreeProfile& prof, int n);

/// Builds the graph for (A, k) and evaluates every counting inequality of
/// the double-counting argument, in exact integer arithmetic. False verdicts
/// are recorded, never thrown: failures are data for counterexample hunting.
VerificationReport verify_counting_chain(const IntegerSet& A, int k,
                                         const GraphBuildOptions& options = {});

/// Same evaluation over an already-built graph for (A, g.k).
VerificationReport verify_counting_chain(const IntegerSet& A, const ExtensionGraph& g);

} // namespace kwedge
