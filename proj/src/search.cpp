#include "kwedge/search.hpp"

#include <algorithm>
#include <chrono>
#include <exception>
#include <numeric>

#include "kwedge/binomial.hpp"
#include "kwedge/errors.hpp"
#include "kwedge/generators.hpp"
#include "kwedge/rng.hpp"

namespace kwedge {

namespace {

// a/b vs c/d on the size ratio |(k+1)^A| / |k^A|, exact via 128-bit products.
bool ratio_strictly_better(std::uint64_t a_k1, std::uint64_t a_k, std::uint64_t b_k1, std::uint64_t b_k) {
    return static_cast<unsigned __int128>(a_k1) * b_k > static_cast<unsigned __int128>(b_k1) * a_k;
}

bool ratio_not_worse(std::uint64_t a_k1, std::uint64_t a_k, std::uint64_t b_k1, std::uint64_t b_k) {
    return static_cast<unsigned __int128>(a_k1) * b_k >= static_cast<unsigned __int128>(b_k1) * a_k;
}

struct BestTracker {
    std::optional<SearchBest> best;

    void consider(const RatioVerdict& v) {
        if (!best || ratio_strictly_better(v.size_k1, v.size_k, best->size_k1, best->size_k) ||
            (!ratio_strictly_better(best->size_k1, best->size_k, v.size_k1, v.size_k) && v.set < best->set)) {
            best = SearchBest{v.set, v.size_k, v.size_k1, v.lhs_cross, v.rhs_cross};
        }
    }

    void merge(const BestTracker& other) {
        if (!other.best) return;
        if (!best) {
            best = other.best;
            return;
        }
        const auto& o = *other.best;
        if (ratio_strictly_better(o.size_k1, o.size_k, best->size_k1, best->size_k) ||
            (!ratio_strictly_better(best->size_k1, best->size_k, o.size_k1, o.size_k) && o.set < best->set)) {
            best = other.best;
        }
    }
};

std::vector<std::int64_t> unrank_combination(std::int64_t M, int n, std::uint64_t rank) {
    std::vector<std::int64_t> c(static_cast<std::size_t>(n));
    std::int64_t v = 1;
    for (int i = 0; i < n; ++i) {
        while (true) {
            const std::uint64_t count = binomial_capped(M - v, n - i - 1);
            if (rank < count) break;
            rank -= count;
            ++v;
        }
        c[static_cast<std::size_t>(i)] = v++;
    }
    return c;
}

bool next_combination(std::vector<std::int64_t>& c, std::int64_t M) {
    const int n = static_cast<int>(c.size());
    for (int i = n - 1; i >= 0; --i) {
        if (c[static_cast<std::size_t>(i)] < M - (n - 1 - i)) {
            ++c[static_cast<std::size_t>(i)];
            for (int j = i + 1; j < n; ++j) {
                c[static_cast<std::size_t>(j)] = c[static_cast<std::size_t>(j - 1)] + 1;
            }
            return true;
        }
    }
    return false;
}

struct ChunkResult {
    BestTracker best;
    std::vector<RatioVerdict> counterexamples;  // in enumeration order
    std::uint64_t evaluated = 0;
};

ChunkResult evaluate_range(std::int64_t M, int n, int k, std::uint64_t rank_lo, std::uint64_t rank_hi,
                           bool pruning) {
    ChunkResult out;
    if (rank_lo >= rank_hi) return out;
    std::vector<std::int64_t> combo = unrank_combination(M, n, rank_lo);
    for (std::uint64_t rank = rank_lo; rank < rank_hi; ++rank) {
        if (!pruning || is_canonical_set(combo)) {
            RatioVerdict v = ratio_check(IntegerSet(std::vector<std::int64_t>(combo)), k);
            ++out.evaluated;
            if (!v.holds && v.hyp_question) out.counterexamples.push_back(v);
            out.best.consider(v);
        }
        if (rank + 1 < rank_hi) next_combination(combo, M);
    }
    return out;
}

} // namespace

bool is_canonical_set(const std::vector<std::int64_t>& elems) {
    if (elems.front() != 1) return false;
    std::int64_t g = 0;
    for (std::size_t i = 1; i < elems.size(); ++i) {
        g = std::gcd(g, elems[i] - elems[i - 1]);
    }
    return elems.size() == 1 || g == 1;
}

SearchReport exhaustive_search(const ExhaustiveParams& p) {
    if (p.n < 2 || p.k < 1 || p.k > p.n - 1) {
        throw invalid_input_error("exhaustive search needs 1 <= k <= n-1, got n=" + std::to_string(p.n) +
                                  ", k=" + std::to_string(p.k));
    }
    if (p.universe_M < p.n) {
        throw invalid_input_error("infeasible search space: n=" + std::to_string(p.n) +
                                  " subsets of {1.." + std::to_string(p.universe_M) + "}");
    }
    const std::uint64_t total = binomial_capped(p.universe_M, p.n);
    if (total > p.budget) {
        throw budget_exceeded_error("exhaustive search would evaluate C(" + std::to_string(p.universe_M) + "," +
                                    std::to_string(p.n) + ") = " + std::to_string(total) +
                                    " sets, over the budget of " + std::to_string(p.budget));
    }

    const auto start = std::chrono::steady_clock::now();

    // Chunk count depends only on the workload, so reports are identical for
    // any thread count.
    const int chunks = static_cast<int>(std::min<std::uint64_t>(128, std::max<std::uint64_t>(1, total / 512)));
    std::vector<ChunkResult> results(static_cast<std::size_t>(chunks));
    std::exception_ptr error;

#pragma omp parallel for schedule(dynamic) if (p.parallel)
    for (int c = 0; c < chunks; ++c) {
        try {
            const std::uint64_t lo = static_cast<std::uint64_t>(
                static_cast<unsigned __int128>(total) * static_cast<unsigned>(c) / static_cast<unsigned>(chunks));
            const std::uint64_t hi = static_cast<std::uint64_t>(
                static_cast<unsigned __int128>(total) * (static_cast<unsigned>(c) + 1) /
                static_cast<unsigned>(chunks));
            results[static_cast<std::size_t>(c)] = evaluate_range(p.universe_M, p.n, p.k, lo, hi,
                                                                  p.canonical_pruning);
        } catch (...) {
#pragma omp critical
            {
                if (!error) error = std::current_exception();
            }
        }
    }
    if (error) std::rethrow_exception(error);

    SearchReport report;
    report.mode = SearchReport::Mode::Exhaustive;
    report.n = p.n;
    report.k = p.k;
    report.universe_M = p.universe_M;
    report.pruned = p.canonical_pruning;
    report.budget = p.budget;
    report.space = std::to_string(p.n) + "-subsets of {1.." + std::to_string(p.universe_M) + "}, k=" +
                   std::to_string(p.k) + (p.canonical_pruning ? ", canonical only" : "");

    BestTracker best;
    for (const auto& chunk : results) {
        report.instances_checked += chunk.evaluated;
        best.merge(chunk.best);
        report.counterexamples.insert(report.counterexamples.end(), chunk.counterexamples.begin(),
                                      chunk.counterexamples.end());
    }
    report.best = best.best;
    report.wall_time_seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    return report;
}

SearchReport stochastic_search(const StochasticParams& p) {
    if (p.n < 2 || p.k < 1 || p.k > p.n - 1) {
        throw invalid_input_error("stochastic search needs 1 <= k <= n-1, got n=" + std::to_string(p.n) +
                                  ", k=" + std::to_string(p.k));
    }
    if (p.budget < 1) throw invalid_input_error("stochastic search budget must be at least 1");
    if (p.lo > p.hi) throw invalid_input_error("stochastic search: empty value range");
    const std::uint64_t span = static_cast<std::uint64_t>(p.hi) - static_cast<std::uint64_t>(p.lo) + 1;
    if (span != 0 && span < static_cast<std::uint64_t>(p.n)) {
        throw invalid_input_error("stochastic search: range [" + std::to_string(p.lo) + "," +
                                  std::to_string(p.hi) + "] too small to hold " + std::to_string(p.n) +
                                  " distinct values");
    }

    const auto start = std::chrono::steady_clock::now();
    const std::uint64_t steps_per_restart = p.steps_per_restart == 0 ? 500 : p.steps_per_restart;
    const std::uint64_t fresh_values = span == 0 ? UINT64_MAX : span - static_cast<std::uint64_t>(p.n);

    SeededRng rng(p.seed);
    BestTracker best;
    std::vector<RatioVerdict> counterexamples;
    std::uint64_t evaluated = 0;

    auto record = [&](const RatioVerdict& v) {
        best.consider(v);
        if (!v.holds && v.hyp_question) counterexamples.push_back(v);
    };

    // j-th smallest value of [lo,hi] \ current, by walking past occupied values.
    auto fresh_value_at = [&](const std::vector<std::int64_t>& elems, std::uint64_t j) {
        std::int64_t v = static_cast<std::int64_t>(static_cast<std::uint64_t>(p.lo) + j);
        for (std::int64_t e : elems) {
            if (e <= v) ++v;
        }
        return v;
    };

    while (evaluated < p.budget) {
        IntegerSet current = make_random_set(p.n, p.lo, p.hi, rng.next());
        RatioVerdict current_verdict = ratio_check(current, p.k);
        ++evaluated;
        record(current_verdict);

        for (std::uint64_t step = 0; step < steps_per_restart && evaluated < p.budget; ++step) {
            if (fresh_values == 0) break;  // the range holds exactly one n-set
            const std::size_t replace = static_cast<std::size_t>(rng.bounded(static_cast<std::uint64_t>(p.n)));
            const std::int64_t fresh = fresh_value_at(current.elements(), rng.bounded(fresh_values));
            std::vector<std::int64_t> candidate = current.elements();
            candidate[replace] = fresh;
            RatioVerdict verdict = ratio_check(IntegerSet(std::move(candidate)), p.k);
            ++evaluated;
            record(verdict);
            if (ratio_not_worse(verdict.size_k1, verdict.size_k, current_verdict.size_k1,
                                current_verdict.size_k)) {
                current = verdict.set;
                current_verdict = verdict;
            }
        }
    }

    // Deterministic certificate list: sorted by set, duplicates collapsed.
    std::sort(counterexamples.begin(), counterexamples.end(),
              [](const RatioVerdict& a, const RatioVerdict& b) { return a.set < b.set; });
    counterexamples.erase(std::unique(counterexamples.begin(), counterexamples.end(),
                                      [](const RatioVerdict& a, const RatioVerdict& b) { return a.set == b.set; }),
                          counterexamples.end());

    SearchReport report;
    report.mode = SearchReport::Mode::Stochastic;
    report.n = p.n;
    report.k = p.k;
    report.lo = p.lo;
    report.hi = p.hi;
    report.budget = p.budget;
    report.steps_per_restart = steps_per_restart;
    report.space = "hill climbing, n=" + std::to_string(p.n) + " in [" + std::to_string(p.lo) + "," +
                   std::to_string(p.hi) + "], k=" + std::to_string(p.k) + ", budget=" + std::to_string(p.budget);
    report.instances_checked = evaluated;
    report.best = best.best;
    report.counterexamples = std::move(counterexamples);
    report.seed = p.seed;
    report.wall_time_seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    return report;
}

} // namespace kwedge
