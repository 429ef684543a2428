#include <algorithm>

#include "doctest.h"
#include "kwedge/errors.hpp"
#include "kwedge/generators.hpp"
#include "kwedge/oracle.hpp"
#include "kwedge/rng.hpp"
#include "kwedge/sumset.hpp"

using kwedge::brute_force_oracle;
using kwedge::IntegerSet;

TEST_CASE("oracle on hand-checked instances") {
    {
        const auto r = brute_force_oracle(IntegerSet({1, 2, 4, 8}), 2);
        CHECK(r.sums == std::vector<std::int64_t>{3, 5, 6, 9, 10, 12});
        for (const auto& [sum, mult] : r.multiplicity) CHECK(mult == 1);
    }
    {
        const auto r = brute_force_oracle(IntegerSet({1, 2, 3, 4, 5}), 2);
        CHECK(r.multiplicity.at(5) == 2);
        CHECK(r.multiplicity.at(6) == 2);
        CHECK(r.multiplicity.at(7) == 2);
        CHECK(r.multiplicity.at(3) == 1);
        CHECK(r.multiplicity.at(4) == 1);
        CHECK(r.multiplicity.at(8) == 1);
        CHECK(r.multiplicity.at(9) == 1);
    }
    {
        IntegerSet a({-4, 1, 6, 9});
        const auto r = brute_force_oracle(a, 4);
        CHECK(r.sums == std::vector<std::int64_t>{12});
        CHECK(r.multiplicity.at(12) == 1);
    }
}

TEST_CASE("oracle threshold guard") {
    std::vector<std::int64_t> values;
    for (int i = 1; i <= 40; ++i) values.push_back(i);
    CHECK_THROWS_AS(brute_force_oracle(IntegerSet(std::move(values)), 12), kwedge::budget_exceeded_error);
}

TEST_CASE("DP kernels match the oracle exactly on random small sets") {
    kwedge::SeededRng rng(2024);
    for (int trial = 0; trial < 60; ++trial) {
        const int n = 1 + static_cast<int>(rng.bounded(12));
        const auto A = kwedge::make_random_set(n, -50, 50, rng.next());
        for (int k = 0; k <= n; ++k) {
            const auto oracle = brute_force_oracle(A, k);
            CHECK(kwedge::ksum_set(A, k) == oracle.sums);

            const auto capped = kwedge::ksum_multiplicity(A, k, 2);
            const auto wide = kwedge::ksum_multiplicity(A, k, 1'000'000);
            REQUIRE(capped.size() == oracle.sums.size());
            for (const auto& [sum, mult] : oracle.multiplicity) {
                CHECK(capped.multiplicity_of(sum) == std::min<std::uint64_t>(2, mult));
                CHECK(wide.multiplicity_of(sum) == mult);
            }
        }
    }
}
