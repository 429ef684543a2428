#include "kwedge/extension_graph.hpp"

#include <algorithm>
#include <exception>

#include "kwedge/checked.hpp"
#include "kwedge/errors.hpp"
#include "kwedge/theorem.hpp"

namespace kwedge {

namespace {

// Edges contributed by one excluded element a: s extends to s+a exactly when
// s is still a k-sum of A \ {a}; two representations surviving the exclusion
// put the edge in H.
std::vector<ExtensionEdge> edges_for_exclusion(const IntegerSet& A, int k, std::int64_t a) {
    const SumMultiplicityTable table = ksum_multiplicity(A, k, 2, a);
    std::vector<ExtensionEdge> out;
    out.reserve(table.entries.size());
    for (const auto& [s, mult] : table.entries) {
        out.push_back({s, s + a, mult >= 2});
    }
    return out;
}

std::vector<ExtensionEdge> build_edges_exclusion(const IntegerSet& A, int k, bool parallel) {
    const auto& e = A.elements();
    const int n = A.n();
    std::vector<std::vector<ExtensionEdge>> per(static_cast<std::size_t>(n));
    std::exception_ptr error;

#pragma omp parallel for schedule(dynamic) if (parallel)
    for (int i = 0; i < n; ++i) {
        try {
            per[static_cast<std::size_t>(i)] = edges_for_exclusion(A, k, e[static_cast<std::size_t>(i)]);
        } catch (...) {
#pragma omp critical
            {
                if (!error) error = std::current_exception();
            }
        }
    }
    if (error) std::rethrow_exception(error);

    std::size_t total = 0;
    for (const auto& chunk : per) total += chunk.size();
    std::vector<ExtensionEdge> edges;
    edges.reserve(total);
    for (auto& chunk : per) edges.insert(edges.end(), chunk.begin(), chunk.end());
    return edges;
}

std::vector<ExtensionEdge> build_edges_representations(const IntegerSet& A, int k, std::uint64_t threshold) {
    const RepresentationList reps = enumerate_representations(A, k, threshold);
    std::vector<ExtensionEdge> edges;
    for (const auto& [s, group] : reps.groups) {
        for (std::int64_t a : A.elements()) {
            int avoiding = 0;
            for (const auto& subset : group) {
                if (!std::binary_search(subset.begin(), subset.end(), a)) {
                    if (++avoiding == 2) break;
                }
            }
            if (avoiding >= 1) edges.push_back({s, s + a, avoiding >= 2});
        }
    }
    return edges;
}

std::size_t index_of(const std::vector<std::int64_t>& sorted, std::int64_t v) {
    return static_cast<std::size_t>(std::lower_bound(sorted.begin(), sorted.end(), v) - sorted.begin());
}

} // namespace

std::int64_t ExtensionGraph::e_H() const {
    std::int64_t count = 0;
    for (const auto& edge : edges) count += edge.in_H ? 1 : 0;
    return count;
}

ExtensionGraph build_extension_graph(const IntegerSet& A, int k, const GraphBuildOptions& options) {
    const int n = A.n();
    if (k < 0 || k > n - 1) {
        throw invalid_input_error("k out of range for graph build: need 0 <= k <= n-1, got k=" +
                                  std::to_string(k) + ", n=" + std::to_string(n));
    }

    ExtensionGraph g;
    g.k = k;
    g.U = ksum_set(A, k);
    g.V = ksum_set(A, k + 1);
    g.S_set = ksum_multiplicity(A, k, 2).keys_with_multiplicity_at_least(2);
    g.T_set = ksum_multiplicity(A, k + 1, 2).keys_with_multiplicity_at_least(2);

    g.edges = options.strategy == GraphBuildStrategy::ExclusionDp
                  ? build_edges_exclusion(A, k, options.parallel)
                  : build_edges_representations(A, k, options.enumeration_threshold);
    std::sort(g.edges.begin(), g.edges.end(), [](const ExtensionEdge& a, const ExtensionEdge& b) {
        return a.s != b.s ? a.s < b.s : a.t < b.t;
    });
    return g;
}

DegreeProfile degree_profile(const ExtensionGraph& g) {
    DegreeProfile prof;
    prof.dG_u.assign(g.U.size(), 0);
    prof.dH_u.assign(g.U.size(), 0);
    prof.dG_v.assign(g.V.size(), 0);
    prof.dH_v.assign(g.V.size(), 0);

    for (const auto& edge : g.edges) {
        const std::size_t iu = index_of(g.U, edge.s);
        const std::size_t iv = index_of(g.V, edge.t);
        ++prof.dG_u[iu];
        ++prof.dG_v[iv];
        if (edge.in_H) {
            ++prof.dH_u[iu];
            ++prof.dH_v[iv];
        }
    }

    for (std::int64_t s : g.S_set) {
        const std::size_t iu = index_of(g.U, s);
        prof.min_dG_over_S = std::min(prof.min_dG_over_S.value_or(prof.dG_u[iu]), prof.dG_u[iu]);
        prof.min_dH_over_S = std::min(prof.min_dH_over_S.value_or(prof.dH_u[iu]), prof.dH_u[iu]);
    }
    for (std::int64_t t : g.T_set) {
        const std::size_t iv = index_of(g.V, t);
        prof.min_dG_over_T = std::min(prof.min_dG_over_T.value_or(prof.dG_v[iv]), prof.dG_v[iv]);
        prof.min_dH_over_T = std::min(prof.min_dH_over_T.value_or(prof.dH_v[iv]), prof.dH_v[iv]);
    }
    return prof;
}

std::vector<CheckResult> run_chain_checks(const ExtensionGraph& g, const DegreeProfile& prof, int n) {
    const std::int64_t k = g.k;
    const std::int64_t eG = g.e_G();
    const std::int64_t eH = g.e_H();
    const std::int64_t sizeU = static_cast<std::int64_t>(g.U.size());
    const std::int64_t sizeV = static_cast<std::int64_t>(g.V.size());
    const std::int64_t sizeS = static_cast<std::int64_t>(g.S_set.size());
    const std::int64_t sizeT = static_cast<std::int64_t>(g.T_set.size());

    std::vector<CheckResult> checks;
    checks.reserve(7);

    // e(G) <= n|U|: no k-sum extends by more than n elements.
    {
        CheckResult c{"edge_count_upper_trivial", eG, checked_mul(n, sizeU), false, std::nullopt};
        c.holds = c.lhs <= c.rhs;
        if (!c.holds) {
            std::size_t worst = 0;
            for (std::size_t i = 1; i < prof.dG_u.size(); ++i) {
                if (prof.dG_u[i] > prof.dG_u[worst]) worst = i;
            }
            c.witness = g.U.empty() ? std::nullopt : std::optional<std::int64_t>(g.U[worst]);
        }
        checks.push_back(std::move(c));
    }

    // e(G) >= (k+1)|V|: every (k+1)-sum is reached from each of its k+1 parts.
    {
        CheckResult c{"edge_count_lower_trivial", eG, checked_mul(k + 1, sizeV), false, std::nullopt};
        c.holds = c.lhs >= c.rhs;
        if (!c.holds) {
            std::size_t worst = 0;
            for (std::size_t i = 1; i < prof.dG_v.size(); ++i) {
                if (prof.dG_v[i] < prof.dG_v[worst]) worst = i;
            }
            c.witness = g.V.empty() ? std::nullopt : std::optional<std::int64_t>(g.V[worst]);
        }
        checks.push_back(std::move(c));
    }

    // e(G) <= (n-k)|U| + k|S|: uniquely represented k-sums have degree
    // exactly n-k, the rest at most n.
    {
        CheckResult c{"edge_count_upper_unique_aware", eG,
                      checked_add(checked_mul(n - k, sizeU), checked_mul(k, sizeS)), false, std::nullopt};
        c.holds = c.lhs <= c.rhs;
        if (!c.holds) {
            std::int64_t worst_excess = 0;
            for (std::size_t i = 0; i < g.U.size(); ++i) {
                const bool repeated = std::binary_search(g.S_set.begin(), g.S_set.end(), g.U[i]);
                const std::int64_t bound = repeated ? n : n - k;
                if (prof.dG_u[i] - bound > worst_excess) {
                    worst_excess = prof.dG_u[i] - bound;
                    c.witness = g.U[i];
                }
            }
        }
        checks.push_back(std::move(c));
    }

    // e(G) >= (k+1)|V| + 2|T|: repeated (k+1)-sums have degree >= k+3.
    {
        CheckResult c{"edge_count_lower_repeat_aware", eG,
                      checked_add(checked_mul(k + 1, sizeV), checked_mul(2, sizeT)), false, std::nullopt};
        c.holds = c.lhs >= c.rhs;
        if (!c.holds) {
            std::int64_t worst_deficit = 0;
            for (std::size_t i = 0; i < g.V.size(); ++i) {
                const bool repeated = std::binary_search(g.T_set.begin(), g.T_set.end(), g.V[i]);
                const std::int64_t bound = repeated ? k + 3 : k + 1;
                if (bound - prof.dG_v[i] > worst_deficit) {
                    worst_deficit = bound - prof.dG_v[i];
                    c.witness = g.V[i];
                }
            }
        }
        checks.push_back(std::move(c));
    }

    // e(H) >= (n-2k)|S|: a repeated k-sum keeps H-edges for every element
    // outside both of its witnessing representations.
    {
        CheckResult c{"h_edge_count_lower", eH, checked_mul(n - 2 * k, sizeS), false, std::nullopt};
        c.holds = c.lhs >= c.rhs;
        if (!c.holds) {
            std::int64_t worst = 0;
            bool first = true;
            for (std::int64_t s : g.S_set) {
                const std::int64_t d = prof.dH_u[index_of(g.U, s)];
                if (first || d < worst) {
                    worst = d;
                    c.witness = s;
                    first = false;
                }
            }
        }
        checks.push_back(std::move(c));
    }

    // min over T of d_G(v_t) >= k+3.
    {
        CheckResult c{"repeated_target_min_degree", prof.min_dG_over_T.value_or(0), k + 3, false, std::nullopt};
        c.holds = g.T_set.empty() || c.lhs >= c.rhs;
        if (!c.holds) {
            for (std::int64_t t : g.T_set) {
                if (prof.dG_v[index_of(g.V, t)] == c.lhs) {
                    c.witness = t;
                    break;
                }
            }
        }
        checks.push_back(std::move(c));
    }

    // (k+3) d_G(v_t) >= (k+1)(k+3) + 2 d_H(v_t) for t in T, in cleared
    // denominator form so everything stays integral.
    {
        CheckResult c{"interpolated_degree_bound", 0, checked_mul(k + 1, k + 3), false, std::nullopt};
        std::optional<std::int64_t> min_combined;
        for (std::int64_t t : g.T_set) {
            const std::size_t iv = index_of(g.V, t);
            const std::int64_t combined =
                checked_sub(checked_mul(k + 3, prof.dG_v[iv]), checked_mul(2, prof.dH_v[iv]));
            if (!min_combined || combined < *min_combined) {
                min_combined = combined;
                if (combined < c.rhs) c.witness = t;
            }
        }
        c.lhs = min_combined.value_or(0);
        c.holds = g.T_set.empty() || c.lhs >= c.rhs;
        if (c.holds) c.witness = std::nullopt;
        checks.push_back(std::move(c));
    }

    return checks;
}

bool VerificationReport::all_checks_pass() const {
    for (const auto& c : checks) {
        if (!c.holds) return false;
    }
    return true;
}

VerificationReport verify_counting_chain(const IntegerSet& A, int k, const GraphBuildOptions& options) {
    return verify_counting_chain(A, build_extension_graph(A, k, options));
}

VerificationReport verify_counting_chain(const IntegerSet& A, const ExtensionGraph& g) {
    const DegreeProfile prof = degree_profile(g);
    const int n = A.n();
    const int k = g.k;

    VerificationReport report{A, k};
    report.size_k = g.U.size();
    report.size_k1 = g.V.size();
    report.s_size = g.S_set.size();
    report.t_size = g.T_set.size();
    report.e_G = g.e_G();
    report.e_H = g.e_H();
    report.checks = run_chain_checks(g, prof, n);
    report.hyp_theorem = theorem_hypothesis(n, k);
    report.hyp_question = question_hypothesis(n, k);

    report.conclusion.lhs_cross = checked_mul(k + 1, static_cast<std::int64_t>(report.size_k1));
    report.conclusion.rhs_cross = checked_mul(n - k, static_cast<std::int64_t>(report.size_k));
    report.conclusion.holds = report.conclusion.lhs_cross <= report.conclusion.rhs_cross;
    report.conclusion.applicable = report.hyp_theorem;
    return report;
}

} // namespace kwedge
