#include "kwedge/json_io.hpp"

namespace kwedge {

namespace {

ojson set_json(const IntegerSet& set) { return ojson(set.elements()); }

ojson best_json(const SearchBest& best) {
    ojson j;
    j["set"] = set_json(best.set);
    j["size_k"] = best.size_k;
    j["size_k1"] = best.size_k1;
    j["lhs_cross"] = best.lhs_cross;
    j["rhs_cross"] = best.rhs_cross;
    return j;
}

} // namespace

ojson to_json(const SumMultiplicityTable& table) {
    ojson j;
    j["k"] = table.k;
    j["cap"] = table.cap;
    ojson entries = ojson::array();
    for (const auto& [sum, mult] : table.entries) {
        entries.push_back(ojson::array({sum, mult}));
    }
    j["entries"] = std::move(entries);
    return j;
}

ojson to_json(const RepresentationList& reps) {
    ojson j;
    j["k"] = reps.k;
    ojson groups = ojson::array();
    for (const auto& [sum, subsets] : reps.groups) {
        groups.push_back(ojson::array({sum, ojson(subsets)}));
    }
    j["groups"] = std::move(groups);
    j["total_subsets"] = reps.total_subsets;
    return j;
}

ojson to_json(const ExtensionGraph& g) {
    ojson j;
    j["k"] = g.k;
    j["U"] = g.U;
    j["V"] = g.V;
    ojson edges = ojson::array();
    for (const auto& edge : g.edges) {
        edges.push_back(ojson::array({edge.s, edge.t, edge.in_H}));
    }
    j["edges"] = std::move(edges);
    j["S_set"] = g.S_set;
    j["T_set"] = g.T_set;
    j["e_G"] = g.e_G();
    j["e_H"] = g.e_H();
    return j;
}

ojson to_json(const CheckResult& check) {
    ojson j;
    j["name"] = check.name;
    j["lhs"] = check.lhs;
    j["rhs"] = check.rhs;
    j["holds"] = check.holds;
    j["witness"] = check.witness ? ojson(*check.witness) : ojson(nullptr);
    return j;
}

ojson to_json(const VerificationReport& report) {
    ojson j;
    j["instance"] = {{"set", set_json(report.set)}, {"n", report.set.n()}, {"k", report.k}};
    j["sizes"] = {{"size_k", report.size_k},
                  {"size_k1", report.size_k1},
                  {"s", report.s_size},
                  {"t", report.t_size}};
    j["e_G"] = report.e_G;
    j["e_H"] = report.e_H;
    ojson checks = ojson::array();
    for (const auto& check : report.checks) checks.push_back(to_json(check));
    j["checks"] = std::move(checks);
    j["conclusion"] = {{"lhs_cross", report.conclusion.lhs_cross},
                       {"rhs_cross", report.conclusion.rhs_cross},
                       {"holds", report.conclusion.holds},
                       {"applicable", report.conclusion.applicable}};
    j["hypothesis_flags"] = {{"theorem", report.hyp_theorem}, {"question", report.hyp_question}};
    return j;
}

ojson to_json(const RatioVerdict& verdict) {
    ojson j;
    j["set"] = set_json(verdict.set);
    j["n"] = verdict.set.n();
    j["k"] = verdict.k;
    j["size_k"] = verdict.size_k;
    j["size_k1"] = verdict.size_k1;
    j["lhs_cross"] = verdict.lhs_cross;
    j["rhs_cross"] = verdict.rhs_cross;
    j["holds"] = verdict.holds;
    j["equality"] = verdict.equality;
    j["hyp_theorem"] = verdict.hyp_theorem;
    j["hyp_question"] = verdict.hyp_question;
    return j;
}

ojson to_json(const StructuralReport& report) {
    ojson j;
    j["set"] = set_json(report.set);
    j["n"] = report.set.n();
    j["sizes"] = report.sizes;
    j["is_ap"] = report.is_ap;
    j["ap_diff"] = report.ap_diff ? ojson(*report.ap_diff) : ojson(nullptr);
    j["is_gp"] = report.is_gp;
    j["gp_ratio"] = report.gp_ratio ? ojson(*report.gp_ratio) : ojson(nullptr);
    ojson checks = ojson::array();
    for (const auto& check : report.checks) {
        checks.push_back({{"name", check.name},
                          {"k", check.k},
                          {"lhs", check.lhs},
                          {"rhs", check.rhs},
                          {"holds", check.holds}});
    }
    j["checks"] = std::move(checks);
    j["all_pass"] = report.all_pass;
    return j;
}

ojson to_json(const SearchReport& report, bool include_timing) {
    ojson j;
    j["mode"] = report.mode == SearchReport::Mode::Exhaustive ? "exhaustive" : "stochastic";
    j["space"] = report.space;
    ojson params;
    params["n"] = report.n;
    params["k"] = report.k;
    if (report.mode == SearchReport::Mode::Exhaustive) {
        params["universe_M"] = report.universe_M;
        params["pruned"] = report.pruned;
        params["budget"] = report.budget;
    } else {
        params["lo"] = report.lo;
        params["hi"] = report.hi;
        params["budget"] = report.budget;
        params["steps_per_restart"] = report.steps_per_restart;
    }
    j["params"] = std::move(params);
    j["instances_checked"] = report.instances_checked;
    j["best"] = report.best ? best_json(*report.best) : ojson(nullptr);
    ojson cex = ojson::array();
    for (const auto& verdict : report.counterexamples) cex.push_back(to_json(verdict));
    j["counterexamples"] = std::move(cex);
    if (report.seed) j["seed"] = *report.seed;
    if (include_timing) j["wall_time_seconds"] = report.wall_time_seconds;
    return j;
}

std::string csv_header() {
    return "set,n,k,size_k,size_k1,lhs_cross,rhs_cross,holds,hyp_theorem,hyp_question";
}

std::string csv_row(const RatioVerdict& v) {
    std::string row = "\"" + v.set.to_string() + "\"";
    row += "," + std::to_string(v.set.n());
    row += "," + std::to_string(v.k);
    row += "," + std::to_string(v.size_k);
    row += "," + std::to_string(v.size_k1);
    row += "," + std::to_string(v.lhs_cross);
    row += "," + std::to_string(v.rhs_cross);
    row += v.holds ? ",true" : ",false";
    row += v.hyp_theorem ? ",true" : ",false";
    row += v.hyp_question ? ",true" : ",false";
    return row;
}

} // namespace kwedge
