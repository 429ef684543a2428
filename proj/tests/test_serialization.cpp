#include "doctest.h"
#include "kwedge/extension_graph.hpp"
#include "kwedge/json_io.hpp"
#include "kwedge/search.hpp"
#include "kwedge/sumset.hpp"
#include "kwedge/theorem.hpp"

using kwedge::IntegerSet;
using kwedge::ojson;

TEST_CASE("graph serializes with edges as [s, t, in_H] triples") {
    const auto g = kwedge::build_extension_graph(IntegerSet({1, 2, 3}), 1);
    const ojson j = kwedge::to_json(g);
    CHECK(j["k"] == 1);
    CHECK(j["U"] == ojson::array({1, 2, 3}));
    CHECK(j["V"] == ojson::array({3, 4, 5}));
    CHECK(j["edges"].size() == 6);
    CHECK(j["edges"][0] == ojson::array({1, 3, false}));
    CHECK(j["e_G"] == 6);
    CHECK(j["e_H"] == 0);
    CHECK(j["S_set"].empty());
}

TEST_CASE("verification report serializes every named check") {
    const auto report = kwedge::verify_counting_chain(IntegerSet({1, 2, 3, 4, 5}), 2);
    const ojson j = kwedge::to_json(report);
    CHECK(j["instance"]["set"] == ojson::array({1, 2, 3, 4, 5}));
    CHECK(j["instance"]["k"] == 2);
    CHECK(j["checks"].size() == 7);
    CHECK(j["checks"][0]["name"] == "edge_count_upper_trivial");
    CHECK(j["checks"][6]["name"] == "interpolated_degree_bound");
    for (const auto& check : j["checks"]) {
        CHECK(check["holds"] == true);
        CHECK(check["witness"].is_null());
    }
    CHECK(j["conclusion"].contains("applicable"));
    CHECK(j["hypothesis_flags"]["question"] == true);
}

TEST_CASE("multiplicity tables serialize as value/count pairs") {
    const auto table = kwedge::ksum_multiplicity(IntegerSet({1, 2, 3, 4, 5}), 2, 2);
    const ojson j = kwedge::to_json(table);
    CHECK(j["entries"][0] == ojson::array({3, 1}));
    CHECK(j["entries"][2] == ojson::array({5, 2}));
}

TEST_CASE("search report serialization is canonical without timing") {
    kwedge::ExhaustiveParams p;
    p.universe_M = 6;
    p.n = 3;
    p.k = 1;
    auto report = kwedge::exhaustive_search(p);

    const ojson without = kwedge::to_json(report);
    CHECK(!without.contains("wall_time_seconds"));
    CHECK(!without.contains("seed"));  // exhaustive runs carry no seed
    CHECK(without["instances_checked"] == 20);

    report.wall_time_seconds = 123.0;
    CHECK(kwedge::to_json(report).dump() == without.dump());  // timing never leaks

    const ojson with = kwedge::to_json(report, true);
    CHECK(with.contains("wall_time_seconds"));
}

TEST_CASE("csv rows follow the fixed column set") {
    CHECK(kwedge::csv_header() == "set,n,k,size_k,size_k1,lhs_cross,rhs_cross,holds,hyp_theorem,hyp_question");
    const auto v = kwedge::ratio_check(IntegerSet({1, 2, 4, 8}), 2);
    CHECK(kwedge::csv_row(v) == "\"1,2,4,8\",4,2,6,4,12,12,true,false,false");
}
