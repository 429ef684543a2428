// Acceptance suite: runs every release criterion at its stated tolerance and
// prints exactly one [PASS]/[FAIL] line per criterion. Exit code 1 when any
// criterion fails.

#include <chrono>
#include <cstdio>
#include <functional>
#include <sstream>
#include <string>
#include <vector>

#include "kwedge/binomial.hpp"
#include "kwedge/extension_graph.hpp"
#include "kwedge/generators.hpp"
#include "kwedge/json_io.hpp"
#include "kwedge/oracle.hpp"
#include "kwedge/rng.hpp"
#include "kwedge/search.hpp"
#include "kwedge/sumset.hpp"
#include "kwedge/theorem.hpp"

namespace {

using kwedge::IntegerSet;

struct CriterionResult {
    bool pass = true;
    std::string detail;
    std::string bytes;  // canonical serialization, for the determinism criterion

    void fail(const std::string& message) {
        pass = false;
        if (detail.empty()) detail = message;  // keep the first failure as the headline
    }
};

// --- criterion 1: DP kernels match the brute-force oracle -------------------

CriterionResult criterion_oracle_equivalence() {
    CriterionResult r;
    kwedge::SeededRng master(42);
    std::uint64_t instances = 0;

    for (int trial = 0; trial < 500; ++trial) {
        const int n = 1 + static_cast<int>(master.bounded(12));
        const auto A = kwedge::make_random_set(n, -50, 50, master.next());
        for (int k = 0; k <= n; ++k) {
            ++instances;
            const auto oracle = kwedge::brute_force_oracle(A, k);
            if (kwedge::ksum_set(A, k) != oracle.sums) {
                r.fail("ksum_set mismatch on " + A.to_string() + ", k=" + std::to_string(k));
            }
            const auto capped = kwedge::ksum_multiplicity(A, k, 2);
            const auto wide = kwedge::ksum_multiplicity(A, k, 1'000'000);
            if (capped.size() != oracle.sums.size() || wide.size() != oracle.sums.size()) {
                r.fail("table key mismatch on " + A.to_string() + ", k=" + std::to_string(k));
            }
            for (const auto& [sum, mult] : oracle.multiplicity) {
                if (capped.multiplicity_of(sum) != std::min<std::uint64_t>(2, mult) ||
                    wide.multiplicity_of(sum) != mult) {
                    r.fail("multiplicity mismatch on " + A.to_string() + ", k=" + std::to_string(k));
                }
            }
            r.bytes += kwedge::to_json(capped).dump();
            r.bytes += '\n';
        }
    }
    if (r.pass) r.detail = std::to_string(instances) + " (set,k) instances, exact agreement";
    return r;
}

// --- criterion 2: AP closed form |k^A| = k(n-k)+1 ----------------------------

CriterionResult criterion_ap_closed_form() {
    CriterionResult r;
    std::uint64_t instances = 0;
    for (int n = 1; n <= 30; ++n) {
        for (std::int64_t d : {1, 3}) {
            const auto A = kwedge::make_ap(n, d, 1);
            for (int k = 0; k <= n; ++k) {
                ++instances;
                const auto expected = static_cast<std::uint64_t>(k) * static_cast<std::uint64_t>(n - k) + 1;
                if (kwedge::ksum_set(A, k).size() != expected) {
                    r.fail("AP size mismatch at n=" + std::to_string(n) + ", d=" + std::to_string(d) +
                           ", k=" + std::to_string(k));
                }
            }
        }
    }
    if (r.pass) r.detail = std::to_string(instances) + " sizes equal k(n-k)+1";
    return r;
}

// --- criterion 3: GP distinct sums and extremal equality ---------------------

CriterionResult criterion_gp_extremal() {
    CriterionResult r;
    for (int n = 2; n <= 20; ++n) {
        const auto A = kwedge::make_gp(n, 2, 1);
        std::vector<std::uint64_t> sizes;
        for (int k = 0; k <= n; ++k) sizes.push_back(kwedge::ksum_set(A, k).size());
        for (int k = 0; k <= n; ++k) {
            if (sizes[static_cast<std::size_t>(k)] != kwedge::binomial_capped(n, k)) {
                r.fail("GP sums not all distinct at n=" + std::to_string(n) + ", k=" + std::to_string(k));
            }
        }
        for (int k = 1; k <= n - 1; ++k) {
            const auto lhs = static_cast<std::uint64_t>(k + 1) * sizes[static_cast<std::size_t>(k) + 1];
            const auto rhs = static_cast<std::uint64_t>(n - k) * sizes[static_cast<std::size_t>(k)];
            if (lhs != rhs) {
                r.fail("GP equality fails at n=" + std::to_string(n) + ", k=" + std::to_string(k));
            }
        }
    }
    if (r.pass) r.detail = "n in [2,20], r=2: |k^A|=C(n,k) and exact cross-product equality";
    return r;
}

// --- criterion 4: symmetry |k^A| = |(n-k)^A| ---------------------------------

CriterionResult criterion_symmetry() {
    CriterionResult r;
    kwedge::SeededRng master(43);
    for (int trial = 0; trial < 200; ++trial) {
        const int n = 1 + static_cast<int>(master.bounded(14));
        const auto A = kwedge::make_random_set(n, -100, 100, master.next());
        std::vector<std::uint64_t> sizes;
        for (int k = 0; k <= n; ++k) sizes.push_back(kwedge::ksum_set(A, k).size());
        for (int k = 0; k <= n; ++k) {
            if (sizes[static_cast<std::size_t>(k)] != sizes[static_cast<std::size_t>(n - k)]) {
                r.fail("symmetry fails on " + A.to_string() + " at k=" + std::to_string(k));
            }
        }
        r.bytes += A.to_string();
        r.bytes += ':';
        for (auto s : sizes) r.bytes += std::to_string(s) + ",";
        r.bytes += '\n';
    }
    if (r.pass) r.detail = "200 random sets, all orders";
    return r;
}

// --- criterion 5: theorem sweep over subsets of {1..11} ----------------------

void for_each_subset_of_1_to_11(const std::function<void(const IntegerSet&)>& fn) {
    for (unsigned mask = 1; mask < (1u << 11); ++mask) {
        if (__builtin_popcount(mask) < 2) continue;
        std::vector<std::int64_t> elems;
        for (int bit = 0; bit < 11; ++bit) {
            if (mask & (1u << bit)) elems.push_back(bit + 1);
        }
        fn(IntegerSet(std::move(elems)));
    }
}

CriterionResult criterion_theorem_sweep() {
    CriterionResult r;
    std::uint64_t instances = 0;
    for_each_subset_of_1_to_11([&](const IntegerSet& A) {
        const int n = A.n();
        for (int k = 1; k <= n - 1 && kwedge::theorem_hypothesis(n, k); ++k) {
            ++instances;
            const auto v = kwedge::ratio_check(A, k);
            if (!v.holds) {
                r.fail("bound violated under the hypothesis: set " + A.to_string() + ", k=" +
                       std::to_string(k));
            }
        }
    });
    if (r.pass) r.detail = std::to_string(instances) + " hypothesis instances, zero violations";
    return r;
}

// --- criterion 6: full proof chain + strategy agreement ----------------------

CriterionResult criterion_proof_chain() {
    CriterionResult r;
    std::uint64_t instances = 0;

    auto verify_instance = [&](const IntegerSet& A, int k) {
        ++instances;
        const auto exclusion = kwedge::build_extension_graph(A, k);
        kwedge::GraphBuildOptions reps;
        reps.strategy = kwedge::GraphBuildStrategy::Representations;
        if (!(exclusion == kwedge::build_extension_graph(A, k, reps))) {
            r.fail("construction strategies disagree on " + A.to_string() + ", k=" + std::to_string(k));
        }
        const auto report = kwedge::verify_counting_chain(A, exclusion);
        if (!report.all_checks_pass()) {
            r.fail("chain check failed on " + A.to_string() + ", k=" + std::to_string(k));
        }
        r.bytes += kwedge::to_json(report).dump();
        r.bytes += '\n';
    };

    for_each_subset_of_1_to_11([&](const IntegerSet& A) {
        const int n = A.n();
        for (int k = 1; k <= n - 1 && kwedge::theorem_hypothesis(n, k); ++k) verify_instance(A, k);
    });

    kwedge::SeededRng master(44);
    for (int trial = 0; trial < 200; ++trial) {
        const int n = 1 + static_cast<int>(master.bounded(12));
        const auto A = kwedge::make_random_set(n, -50, 50, master.next());
        for (int k = 0; k <= n - 1; ++k) verify_instance(A, k);
    }

    if (r.pass) r.detail = std::to_string(instances) + " graphs, all seven checks pass, strategies agree";
    return r;
}

// --- criterion 7: AP failure boundary -----------------------------------------

// Stated boundary: holds exactly for k <= (n-1)/2, fails for every larger
// k <= n-1. The k = n-1 instances cannot fail: (k+1)|n^A| = n*1 and
// (n-k)|(n-1)^A| = 1*n for every set, an unconditional equality, so the
// criterion is expected red on exactly those edges (see the decisions
// ledger). Anything else diverging from the stated boundary is a real bug.
CriterionResult criterion_ap_boundary() {
    CriterionResult r;
    std::uint64_t matched = 0;
    std::uint64_t top_edge_equalities = 0;
    for (int n = 3; n <= 25; ++n) {
        const auto A = kwedge::make_ap(n, 1, 1);
        for (int k = 1; k <= n - 1; ++k) {
            const auto verdict = kwedge::ratio_check(A, k);
            const bool stated = 2 * k <= n - 1;
            if (verdict.holds == stated) {
                ++matched;
            } else if (k == n - 1 && verdict.holds && verdict.equality) {
                ++top_edge_equalities;
            } else {
                r.fail("unexpected boundary divergence at n=" + std::to_string(n) + ", k=" +
                       std::to_string(k));
            }
        }
    }
    if (top_edge_equalities > 0) {
        r.fail("stated failure range includes k = n-1, but those " + std::to_string(top_edge_equalities) +
               " instances are unconditional equalities (other " + std::to_string(matched) +
               " instances match the stated boundary exactly)");
    }
    if (r.pass) r.detail = "holds exactly for k <= (n-1)/2 on {1..n}, n in [3,25]";
    return r;
}

// --- criterion 8: exhaustive question-1 evidence -----------------------------

CriterionResult criterion_question_evidence() {
    CriterionResult r;
    std::uint64_t counterexamples = 0;
    int runs = 0;

    for (int n = 3; n <= 8; ++n) {
        for (int k = 1; 2 * k < n; ++k) {
            ++runs;
            kwedge::ExhaustiveParams params;
            params.universe_M = 12;
            params.n = n;
            params.k = k;
            const auto report = kwedge::exhaustive_search(params);
            if (report.instances_checked != kwedge::binomial_capped(12, n)) {
                r.fail("incomplete enumeration for n=" + std::to_string(n) + ", k=" + std::to_string(k));
            }
            for (const auto& cex : report.counterexamples) {
                ++counterexamples;
                const auto again = kwedge::ratio_check(cex.set, cex.k);
                if (again.holds || !again.hyp_question || again.lhs_cross != cex.lhs_cross ||
                    again.rhs_cross != cex.rhs_cross) {
                    r.fail("certificate does not re-verify: " + cex.set.to_string());
                }
            }
            r.bytes += kwedge::to_json(report).dump();
            r.bytes += '\n';
        }
    }
    if (r.pass) {
        r.detail = std::to_string(runs) + " spaces enumerated, " + std::to_string(counterexamples) +
                   " counterexamples, certificates intact";
    }
    return r;
}

// --- criterion 10: desk-scale performance ------------------------------------

CriterionResult criterion_performance() {
    CriterionResult r;
    using clock_type = std::chrono::steady_clock;

    const auto big = kwedge::make_random_set(100, -100000, 100000, 2024);
    auto start = clock_type::now();
    const auto sums = kwedge::ksum_set(big, 10);
    const double sumset_seconds = std::chrono::duration<double>(clock_type::now() - start).count();
    if (sumset_seconds >= 5.0) r.fail("ksum_set n=100 k=10 took " + std::to_string(sumset_seconds) + " s");

    const auto mid = kwedge::make_random_set(14, -100000, 100000, 4);
    start = clock_type::now();
    const auto g = kwedge::build_extension_graph(mid, 4);
    const double graph_seconds = std::chrono::duration<double>(clock_type::now() - start).count();
    if (graph_seconds >= 10.0) r.fail("graph build n=14 k=4 took " + std::to_string(graph_seconds) + " s");

    if (r.pass) {
        std::ostringstream detail;
        detail.precision(2);
        detail << std::fixed << "|10^A|=" << sums.size() << " in " << sumset_seconds << " s; e(G)=" << g.e_G()
               << " in " << graph_seconds << " s";
        r.detail = detail.str();
    }
    return r;
}

} // namespace

int main() {
    int failures = 0;
    std::string first_run_bytes[4];

    const auto run = [&failures](const char* name, const std::function<CriterionResult()>& fn,
                                 std::string* bytes_out = nullptr) {
        const auto start = std::chrono::steady_clock::now();
        CriterionResult result;
        try {
            result = fn();
        } catch (const std::exception& e) {
            result.pass = false;
            result.detail = std::string("exception: ") + e.what();
        }
        const double seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
        std::printf("[%s] %s%s%s (%.1f s)\n", result.pass ? "PASS" : "FAIL", name,
                    result.detail.empty() ? "" : ": ", result.detail.c_str(), seconds);
        std::fflush(stdout);
        if (!result.pass) ++failures;
        if (bytes_out) *bytes_out = std::move(result.bytes);
    };

    run("criterion 1, oracle equivalence", criterion_oracle_equivalence, &first_run_bytes[0]);
    run("criterion 2, AP closed form", criterion_ap_closed_form);
    run("criterion 3, GP extremal equality", criterion_gp_extremal);
    run("criterion 4, symmetry", criterion_symmetry, &first_run_bytes[1]);
    run("criterion 5, theorem sweep", criterion_theorem_sweep);
    run("criterion 6, proof chain", criterion_proof_chain, &first_run_bytes[2]);
    run("criterion 7, AP failure boundary", criterion_ap_boundary);
    run("criterion 8, question-1 evidence", criterion_question_evidence, &first_run_bytes[3]);

    run("criterion 9, determinism", [&first_run_bytes]() {
        CriterionResult r;
        const char* names[4] = {"oracle equivalence", "symmetry", "proof chain", "question-1 evidence"};
        const std::function<CriterionResult()> reruns[4] = {
            criterion_oracle_equivalence, criterion_symmetry, criterion_proof_chain,
            criterion_question_evidence};
        for (int i = 0; i < 4; ++i) {
            if (reruns[i]().bytes != first_run_bytes[i]) {
                r.fail(std::string("rerun of ") + names[i] + " produced different bytes");
            }
        }
        if (r.pass) r.detail = "criteria 1, 4, 6, 8 reruns byte-identical";
        return r;
    });

    run("criterion 10, desk-scale performance", criterion_performance);

    std::printf("%s\n", failures == 0 ? "acceptance: all criteria pass" : "acceptance: FAILURES present");
    return failures == 0 ? 0 : 1;
}
