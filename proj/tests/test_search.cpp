#include "doctest.h"
#include "kwedge/errors.hpp"
#include "kwedge/json_io.hpp"
#include "kwedge/search.hpp"
#include "kwedge/theorem.hpp"

using kwedge::ExhaustiveParams;
using kwedge::exhaustive_search;
using kwedge::StochasticParams;
using kwedge::stochastic_search;

namespace {

ExhaustiveParams exhaustive(std::int64_t M, int n, int k) {
    ExhaustiveParams p;
    p.universe_M = M;
    p.n = n;
    p.k = k;
    return p;
}

// same size ratio, compared exactly
bool same_ratio(const kwedge::SearchBest& a, const kwedge::SearchBest& b) {
    return static_cast<unsigned __int128>(a.size_k1) * b.size_k ==
           static_cast<unsigned __int128>(b.size_k1) * a.size_k;
}

} // namespace

TEST_CASE("all twenty 3-subsets of {1..6} tie at ratio 1 for k=1") {
    const auto report = exhaustive_search(exhaustive(6, 3, 1));
    CHECK(report.instances_checked == 20);
    REQUIRE(report.best.has_value());
    CHECK(report.best->set.to_string() == "1,2,3");  // lexicographic tie-break
    CHECK(report.best->lhs_cross == report.best->rhs_cross);
    CHECK(report.counterexamples.empty());
}

TEST_CASE("no bound failures among 5-subsets of {1..8} with n > 2k") {
    const auto report = exhaustive_search(exhaustive(8, 5, 2));
    CHECK(report.instances_checked == 56);
    CHECK(report.counterexamples.empty());
}

TEST_CASE("bound failures outside n > 2k are not reported as counterexamples") {
    const auto report = exhaustive_search(exhaustive(6, 4, 2));  // n = 2k
    REQUIRE(report.best.has_value());
    // {1,2,3,4} fails the bound here, but the question hypothesis filters it out
    const auto v = kwedge::ratio_check(kwedge::IntegerSet({1, 2, 3, 4}), 2);
    CHECK(!v.holds);
    CHECK(!v.hyp_question);
    CHECK(report.counterexamples.empty());
}

TEST_CASE("search guards: infeasible space and budget") {
    CHECK_THROWS_AS(exhaustive_search(exhaustive(4, 5, 1)), kwedge::invalid_input_error);
    CHECK_THROWS_AS(exhaustive_search(exhaustive(6, 3, 3)), kwedge::invalid_input_error);

    auto p = exhaustive(30, 15, 3);
    p.budget = 1000;  // C(30,15) = 155117520
    CHECK_THROWS_WITH_AS(exhaustive_search(p),
                         "exhaustive search would evaluate C(30,15) = 155117520 sets, over the budget of 1000",
                         kwedge::budget_exceeded_error);
}

TEST_CASE("exhaustive reports are reproducible and thread-count independent") {
    auto p = exhaustive(9, 4, 1);
    const auto parallel = exhaustive_search(p);
    p.parallel = false;
    const auto serial = exhaustive_search(p);

    CHECK(kwedge::to_json(parallel).dump() == kwedge::to_json(serial).dump());
    CHECK(parallel.instances_checked == 126);
}

TEST_CASE("canonical pruning preserves the best ratio on every small space") {
    for (int n = 2; n <= 6; ++n) {
        for (int k = 1; k <= n - 1; ++k) {
            auto p = exhaustive(6, n, k);
            const auto full = exhaustive_search(p);
            p.canonical_pruning = true;
            const auto pruned = exhaustive_search(p);
            REQUIRE(full.best.has_value());
            REQUIRE(pruned.best.has_value());
            CHECK(same_ratio(*full.best, *pruned.best));
            CHECK(pruned.instances_checked <= full.instances_checked);
        }
    }
}

TEST_CASE("canonical form detector") {
    CHECK(kwedge::is_canonical_set({1, 2, 4}));
    CHECK(kwedge::is_canonical_set({1}));
    CHECK(!kwedge::is_canonical_set({2, 3, 5}));  // min != 1
    CHECK(!kwedge::is_canonical_set({1, 3, 5}));  // gaps share factor 2
}

TEST_CASE("stochastic search is deterministic per seed") {
    StochasticParams p;
    p.n = 6;
    p.k = 2;
    p.lo = 1;
    p.hi = 64;
    p.seed = 1;
    p.budget = 2000;

    const auto first = stochastic_search(p);
    const auto second = stochastic_search(p);
    CHECK(kwedge::to_json(first).dump() == kwedge::to_json(second).dump());
    CHECK(first.instances_checked == 2000);
    REQUIRE(first.seed.has_value());
    CHECK(*first.seed == 1);

    p.seed = 2;
    const auto other = stochastic_search(p);
    CHECK(other.instances_checked == 2000);  // same budget, different trajectory
}

TEST_CASE("best-so-far is monotone in the evaluation budget") {
    StochasticParams p;
    p.n = 6;
    p.k = 2;
    p.lo = 1;
    p.hi = 64;
    p.seed = 11;

    std::optional<kwedge::SearchBest> previous;
    for (std::uint64_t budget : {50, 200, 1000, 4000}) {
        p.budget = budget;
        const auto report = stochastic_search(p);
        REQUIRE(report.best.has_value());
        if (previous) {
            // monotone: a longer prefix of the same trajectory never does worse
            const bool improved_or_equal =
                static_cast<unsigned __int128>(report.best->size_k1) * previous->size_k >=
                static_cast<unsigned __int128>(previous->size_k1) * report.best->size_k;
            CHECK(improved_or_equal);
        }
        previous = report.best;
    }
}

TEST_CASE("stochastic best certificates re-verify") {
    StochasticParams p;
    p.n = 5;
    p.k = 2;
    p.lo = -30;
    p.hi = 30;
    p.seed = 3;
    p.budget = 500;
    const auto report = stochastic_search(p);
    REQUIRE(report.best.has_value());
    const auto again = kwedge::ratio_check(report.best->set, p.k);
    CHECK(again.size_k == report.best->size_k);
    CHECK(again.size_k1 == report.best->size_k1);
    CHECK(again.lhs_cross == report.best->lhs_cross);
    CHECK(again.rhs_cross == report.best->rhs_cross);
}

TEST_CASE("stochastic guards") {
    StochasticParams p;
    p.n = 5;
    p.k = 2;
    p.lo = 1;
    p.hi = 4;
    p.seed = 1;
    CHECK_THROWS_AS(stochastic_search(p), kwedge::invalid_input_error);  // range too small

    p.hi = 64;
    p.budget = 0;
    CHECK_THROWS_AS(stochastic_search(p), kwedge::invalid_input_error);
}
