// Command-line front end: compute sumset tables, verify the counting chain,
// search for extremal sets and counterexamples, aggregate prior artifacts.
//
// Exit codes: 0 success (a found counterexample is a result, not an error),
// 2 invalid input, 3 budget exceeded, 4 internal invariant violation.

#include <chrono>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#ifdef _OPENMP
#include <omp.h>
#endif

#include "CLI11.hpp"
#include "kwedge/checked.hpp"
#include "kwedge/errors.hpp"
#include "kwedge/extension_graph.hpp"
#include "kwedge/generators.hpp"
#include "kwedge/json_io.hpp"
#include "kwedge/parsing.hpp"
#include "kwedge/search.hpp"
#include "kwedge/structural.hpp"
#include "kwedge/sumset.hpp"
#include "kwedge/theorem.hpp"
#include "kwedge/version.hpp"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitInvalidInput = 2;
constexpr int kExitBudget = 3;
constexpr int kExitInternal = 4;

using kwedge::ojson;

struct CommonOptions {
    std::string set_text;
    std::string gen_text;
    std::string file_path;
    std::string k_text;
    std::string format = "text";
    std::string out_path;
    bool serial = false;
    int threads = 0;
    bool timing = false;
};

void add_common_flags(CLI::App* cmd, CommonOptions& opt, bool with_sources) {
    if (with_sources) {
        auto* set = cmd->add_option("--set", opt.set_text, "Inline set, comma-separated integers");
        auto* gen = cmd->add_option("--gen", opt.gen_text,
                                    "Generator spec: gp:n=..,r=..,a0=.. | ap:n=..,d=..,a0=.. | "
                                    "random:n=..,lo=..,hi=..,seed=..");
        auto* file = cmd->add_option("--file", opt.file_path, "File with one set per line, '#' comments");
        set->excludes(gen)->excludes(file);
        gen->excludes(file);
        cmd->add_option("--k", opt.k_text, "Sum order K or inclusive range A..B");
    }
    cmd->add_option("--format", opt.format, "Output format")
        ->check(CLI::IsMember({"json", "csv", "text"}))
        ->capture_default_str();
    cmd->add_option("--out", opt.out_path, "Write output to file instead of stdout");
    cmd->add_flag("--serial", opt.serial, "Force the serial code paths");
    cmd->add_option("--threads", opt.threads, "OpenMP thread count (0 = runtime default)");
    cmd->add_flag("--timing", opt.timing, "Embed wall time in artifacts (breaks byte-reproducibility)");
}

std::vector<kwedge::IntegerSet> resolve_sets(const CommonOptions& opt) {
    if (!opt.set_text.empty()) return {kwedge::IntegerSet::parse(opt.set_text)};
    if (!opt.gen_text.empty()) return {kwedge::generate(kwedge::parse_gen_spec(opt.gen_text))};
    if (!opt.file_path.empty()) return kwedge::read_sets_file(opt.file_path);
    throw kwedge::invalid_input_error("no input set: pass --set, --gen or --file");
}

// Resolved k range for one set, bounds-checked against that set's n.
kwedge::KRange resolve_k_range(const CommonOptions& opt, int n, int default_lo, int default_hi, int max_hi) {
    kwedge::KRange range;
    if (opt.k_text.empty()) {
        range.lo = default_lo;
        range.hi = default_hi;
    } else {
        range = kwedge::parse_k_range(opt.k_text);
    }
    if (range.lo < 0 || range.hi > max_hi) {
        throw kwedge::invalid_input_error("k range " + std::to_string(range.lo) + ".." +
                                          std::to_string(range.hi) + " out of bounds for n=" +
                                          std::to_string(n) + " (max k " + std::to_string(max_hi) + ")");
    }
    return range;
}

void emit(const CommonOptions& opt, const std::string& payload) {
    if (opt.out_path.empty()) {
        std::cout << payload;
        return;
    }
    std::ofstream out(opt.out_path, std::ios::binary);
    if (!out) throw kwedge::invalid_input_error("cannot open output file \"" + opt.out_path + "\"");
    out << payload;
}

ojson base_config(const std::string& command, const CommonOptions& opt) {
    ojson config;
    config["command"] = command;
    if (!opt.set_text.empty()) config["set"] = opt.set_text;
    if (!opt.gen_text.empty()) config["gen"] = opt.gen_text;
    if (!opt.file_path.empty()) config["file"] = opt.file_path;
    if (!opt.k_text.empty()) config["k"] = opt.k_text;
    config["format"] = opt.format;
    config["serial"] = opt.serial;
    config["threads"] = opt.threads;
    return config;
}

std::string json_artifact(const ojson& config, const char* key, ojson payload, const CommonOptions& opt,
                          double wall_seconds) {
    ojson j;
    j["tool"] = "kwedge";
    j["version"] = kwedge::kVersion;
    j["config"] = config;
    j[key] = std::move(payload);
    if (opt.timing) j["wall_time_seconds"] = wall_seconds;
    return j.dump(2) + "\n";
}

std::string csv_artifact(const ojson& config, const std::vector<kwedge::RatioVerdict>& rows) {
    std::string out = "# config " + config.dump() + "\n" + kwedge::csv_header() + "\n";
    for (const auto& row : rows) out += kwedge::csv_row(row) + "\n";
    return out;
}

void print_counterexample(std::ostream& os, const kwedge::RatioVerdict& v) {
    os << "COUNTEREXAMPLE CANDIDATE (n > 2k, ratio bound fails)\n"
       << "  set = " << v.set.to_string() << "  n = " << v.set.n() << "  k = " << v.k << "\n"
       << "  |k^A| = " << v.size_k << "  |(k+1)^A| = " << v.size_k1 << "\n"
       << "  (k+1)*|(k+1)^A| = " << v.lhs_cross << " > (n-k)*|k^A| = " << v.rhs_cross << "\n"
       << "  replay: kwedge compute --set " << v.set.to_string() << " --k " << v.k << " --format json\n";
}

// ---------------------------------------------------------------- compute --

int run_compute(const CommonOptions& opt, std::uint32_t cap, bool with_reps, std::uint64_t enum_threshold) {
    const auto start = std::chrono::steady_clock::now();
    const auto sets = resolve_sets(opt);

    ojson config = base_config("compute", opt);
    config["cap"] = cap;
    config["representations"] = with_reps;
    config["enumeration_threshold"] = enum_threshold;

    ojson results = ojson::array();
    std::vector<kwedge::RatioVerdict> csv_rows;
    std::ostringstream text;

    for (const auto& A : sets) {
        const int n = A.n();
        const auto range = resolve_k_range(opt, n, 0, n, n);

        ojson set_block;
        set_block["set"] = ojson(A.elements());
        set_block["n"] = n;
        ojson per_k = ojson::array();
        text << "set " << A.to_string() << " (n=" << n << ")\n";

        for (int k = range.lo; k <= range.hi; ++k) {
            const auto table = kwedge::ksum_multiplicity(A, k, cap);
            std::uint64_t unique = 0;
            for (const auto& [sum, mult] : table.entries) unique += mult == 1 ? 1 : 0;

            ojson entry;
            entry["k"] = k;
            entry["size"] = table.size();
            entry["min"] = table.entries.front().first;
            entry["max"] = table.entries.back().first;
            entry["unique"] = unique;
            entry["repeated"] = table.size() - unique;
            entry["table"] = kwedge::to_json(table)["entries"];
            if (with_reps) {
                entry["representations"] =
                    kwedge::to_json(kwedge::enumerate_representations(A, k, enum_threshold))["groups"];
            }
            per_k.push_back(std::move(entry));

            text << "  k=" << k << ": |k^A|=" << table.size() << " range [" << table.entries.front().first
                 << "," << table.entries.back().first << "] unique=" << unique << " repeated="
                 << (table.size() - unique) << "\n";

            if (k >= 1 && k <= n - 1) csv_rows.push_back(kwedge::ratio_check(A, k));
        }
        set_block["results"] = std::move(per_k);
        results.push_back(std::move(set_block));
    }

    const double wall = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    if (opt.format == "json") {
        emit(opt, json_artifact(config, "results", std::move(results), opt, wall));
    } else if (opt.format == "csv") {
        emit(opt, csv_artifact(config, csv_rows));
    } else {
        emit(opt, text.str());
    }
    if (opt.timing) std::cerr << "compute finished in " << wall << " s\n";
    return kExitOk;
}

// ----------------------------------------------------------------- verify --

int run_verify(const CommonOptions& opt, const std::string& strategy, std::uint64_t enum_threshold,
               bool with_structural, bool with_graphs) {
    const auto start = std::chrono::steady_clock::now();
    const auto sets = resolve_sets(opt);

    ojson config = base_config("verify", opt);
    config["strategy"] = strategy;
    config["enumeration_threshold"] = enum_threshold;
    config["structural"] = with_structural;
    config["graphs"] = with_graphs;

    kwedge::GraphBuildOptions build;
    build.parallel = !opt.serial;
    build.enumeration_threshold = enum_threshold;
    if (strategy == "representations") build.strategy = kwedge::GraphBuildStrategy::Representations;

    ojson results = ojson::array();
    ojson structural = ojson::array();
    std::vector<kwedge::RatioVerdict> csv_rows;
    std::ostringstream text;
    bool internal_failure = false;
    std::vector<kwedge::RatioVerdict> counterexamples;

    for (const auto& A : sets) {
        const int n = A.n();
        const auto range = resolve_k_range(opt, n, n == 1 ? 0 : 1, n - 1, n - 1);
        text << "set " << A.to_string() << " (n=" << n << ")\n";

        for (int k = range.lo; k <= range.hi; ++k) {
            kwedge::ExtensionGraph graph = kwedge::build_extension_graph(A, k, build);
            if (strategy == "both") {
                kwedge::GraphBuildOptions rep_build = build;
                rep_build.strategy = kwedge::GraphBuildStrategy::Representations;
                const kwedge::ExtensionGraph cross = kwedge::build_extension_graph(A, k, rep_build);
                if (!(graph == cross)) {
                    std::cerr << "internal invariant violation: construction strategies disagree for set "
                              << A.to_string() << ", k=" << k << "\n";
                    internal_failure = true;
                }
            }
            const kwedge::VerificationReport report = kwedge::verify_counting_chain(A, graph);
            ojson result = kwedge::to_json(report);
            if (with_graphs) result["graph"] = kwedge::to_json(graph);
            results.push_back(std::move(result));

            text << "  k=" << k << ": e(G)=" << report.e_G << " e(H)=" << report.e_H << "\n";
            for (const auto& check : report.checks) {
                const bool vacuous = report.t_size == 0 && (check.name == "repeated_target_min_degree" ||
                                                            check.name == "interpolated_degree_bound");
                text << "    [" << (check.holds ? "pass" : "FAIL") << "] " << check.name << ": ";
                if (vacuous) {
                    text << "vacuous (no repeated targets)\n";
                } else {
                    text << check.lhs << (check.name.find("upper") != std::string::npos ? " <= " : " >= ")
                         << check.rhs << "\n";
                }
                if (!check.holds) internal_failure = true;
            }
            text << "    [" << (report.conclusion.holds ? "pass" : "FAIL") << "] ratio_bound: "
                 << report.conclusion.lhs_cross << " <= " << report.conclusion.rhs_cross
                 << (report.conclusion.applicable ? "" : " (hypothesis not met, informational)") << "\n";

            kwedge::RatioVerdict row{A, k};
            row.size_k = report.size_k;
            row.size_k1 = report.size_k1;
            row.lhs_cross = report.conclusion.lhs_cross;
            row.rhs_cross = report.conclusion.rhs_cross;
            row.holds = report.conclusion.holds;
            row.equality = report.conclusion.lhs_cross == report.conclusion.rhs_cross;
            row.hyp_theorem = report.hyp_theorem;
            row.hyp_question = report.hyp_question;
            csv_rows.push_back(row);

            if (!report.conclusion.holds && report.conclusion.applicable) {
                std::cerr << "internal invariant violation: ratio bound failed although n >= (k^2+7k)/2 "
                          << "for set " << A.to_string() << ", k=" << k << "\n";
                internal_failure = true;
            }
            if (!report.conclusion.holds && report.hyp_question) counterexamples.push_back(row);
        }

        if (with_structural) {
            const auto s = kwedge::structural_checks(A);
            structural.push_back(kwedge::to_json(s));
            if (!s.all_pass) internal_failure = true;
            text << "  structural: " << (s.all_pass ? "all pass" : "FAIL") << " (ap=" << s.is_ap
                 << " gp=" << s.is_gp << ")\n";
        }
    }

    const double wall = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    if (opt.format == "json") {
        ojson j;
        j["tool"] = "kwedge";
        j["version"] = kwedge::kVersion;
        j["config"] = config;
        j["results"] = std::move(results);
        if (with_structural) j["structural"] = std::move(structural);
        if (opt.timing) j["wall_time_seconds"] = wall;
        emit(opt, j.dump(2) + "\n");
    } else if (opt.format == "csv") {
        emit(opt, csv_artifact(config, csv_rows));
    } else {
        emit(opt, text.str());
    }

    for (const auto& cex : counterexamples) print_counterexample(std::cerr, cex);
    if (opt.timing) std::cerr << "verify finished in " << wall << " s\n";
    return internal_failure ? kExitInternal : kExitOk;
}

// ----------------------------------------------------------------- search --

int run_search(const CommonOptions& opt, bool exhaustive, bool stochastic, std::int64_t universe, int n, int k,
               std::uint64_t budget, bool prune, std::int64_t lo, std::int64_t hi, std::uint64_t seed,
               std::uint64_t steps_per_restart) {
    if (exhaustive == stochastic) {
        throw kwedge::invalid_input_error("pass exactly one of --exhaustive / --stochastic");
    }

    ojson config = base_config("search", opt);
    config["mode"] = exhaustive ? "exhaustive" : "stochastic";
    config["n"] = n;
    config["k"] = k;
    config["budget"] = budget;
    if (exhaustive) {
        config["universe"] = universe;
        config["prune"] = prune;
    } else {
        config["lo"] = lo;
        config["hi"] = hi;
        config["seed"] = seed;
        config["steps_per_restart"] = steps_per_restart;
    }

    kwedge::SearchReport report;
    if (exhaustive) {
        kwedge::ExhaustiveParams params;
        params.universe_M = universe;
        params.n = n;
        params.k = k;
        params.budget = budget;
        params.canonical_pruning = prune;
        params.parallel = !opt.serial;
        report = kwedge::exhaustive_search(params);
    } else {
        kwedge::StochasticParams params;
        params.n = n;
        params.k = k;
        params.lo = lo;
        params.hi = hi;
        params.seed = seed;
        params.budget = budget;
        params.steps_per_restart = steps_per_restart;
        report = kwedge::stochastic_search(params);
    }

    if (opt.format == "json") {
        emit(opt, json_artifact(config, "report", kwedge::to_json(report, opt.timing), opt,
                                report.wall_time_seconds));
    } else if (opt.format == "csv") {
        std::vector<kwedge::RatioVerdict> rows;
        if (report.best) {
            rows.push_back(kwedge::ratio_check(report.best->set, report.k));
        }
        for (const auto& cex : report.counterexamples) rows.push_back(cex);
        emit(opt, csv_artifact(config, rows));
    } else {
        std::ostringstream text;
        text << "search " << report.space << "\n";
        text << "  instances checked: " << report.instances_checked << "\n";
        if (report.best) {
            text << "  best set: " << report.best->set.to_string() << "  |k^A|=" << report.best->size_k
                 << " |(k+1)^A|=" << report.best->size_k1 << "  cross " << report.best->lhs_cross
                 << (report.best->lhs_cross == report.best->rhs_cross ? " == " : " vs ")
                 << report.best->rhs_cross << "\n";
        }
        text << "  counterexamples (n > 2k, bound fails): " << report.counterexamples.size() << "\n";
        emit(opt, text.str());
    }

    for (const auto& cex : report.counterexamples) print_counterexample(std::cerr, cex);
    if (opt.timing) std::cerr << "search finished in " << report.wall_time_seconds << " s\n";
    return kExitOk;
}

// ----------------------------------------------------------------- report --

kwedge::RatioVerdict row_from_parts(const std::vector<std::int64_t>& elems, int k, std::uint64_t size_k,
                                    std::uint64_t size_k1) {
    kwedge::IntegerSet set{std::vector<std::int64_t>(elems)};
    const int n = set.n();
    kwedge::RatioVerdict row{std::move(set), k};
    row.size_k = size_k;
    row.size_k1 = size_k1;
    row.lhs_cross = kwedge::checked_mul(k + 1, static_cast<std::int64_t>(size_k1));
    row.rhs_cross = kwedge::checked_mul(n - k, static_cast<std::int64_t>(size_k));
    row.holds = row.lhs_cross <= row.rhs_cross;
    row.equality = row.lhs_cross == row.rhs_cross;
    row.hyp_theorem = kwedge::theorem_hypothesis(n, k);
    row.hyp_question = kwedge::question_hypothesis(n, k);
    return row;
}

kwedge::RatioVerdict row_from_verdict_json(const ojson& j) {
    return row_from_parts(j.at("set").get<std::vector<std::int64_t>>(), j.at("k").get<int>(),
                          j.at("size_k").get<std::uint64_t>(), j.at("size_k1").get<std::uint64_t>());
}

int run_report(const CommonOptions& opt, const std::vector<std::string>& inputs) {
    std::vector<kwedge::RatioVerdict> rows;

    for (const std::string& path : inputs) {
        std::ifstream in(path);
        if (!in) throw kwedge::invalid_input_error("cannot open artifact \"" + path + "\"");
        ojson j;
        try {
            j = ojson::parse(in);
        } catch (const std::exception& e) {
            throw kwedge::invalid_input_error("cannot parse artifact \"" + path + "\": " + e.what());
        }
        if (!j.contains("config") || !j["config"].contains("command")) {
            throw kwedge::invalid_input_error("artifact \"" + path + "\" carries no config.command");
        }
        const std::string command = j["config"]["command"].get<std::string>();

        if (command == "verify") {
            for (const auto& r : j.at("results")) {
                rows.push_back(row_from_parts(r.at("instance").at("set").get<std::vector<std::int64_t>>(),
                                              r.at("instance").at("k").get<int>(),
                                              r.at("sizes").at("size_k").get<std::uint64_t>(),
                                              r.at("sizes").at("size_k1").get<std::uint64_t>()));
            }
        } else if (command == "search") {
            const auto& rep = j.at("report");
            if (!rep.at("best").is_null()) {
                const auto& best = rep.at("best");
                rows.push_back(row_from_parts(best.at("set").get<std::vector<std::int64_t>>(),
                                              rep.at("params").at("k").get<int>(),
                                              best.at("size_k").get<std::uint64_t>(),
                                              best.at("size_k1").get<std::uint64_t>()));
            }
            for (const auto& cex : rep.at("counterexamples")) rows.push_back(row_from_verdict_json(cex));
        } else if (command == "compute") {
            for (const auto& block : j.at("results")) {
                const auto elems = block.at("set").get<std::vector<std::int64_t>>();
                const auto& per_k = block.at("results");
                for (std::size_t i = 0; i + 1 < per_k.size(); ++i) {
                    const int k = per_k[i].at("k").get<int>();
                    if (per_k[i + 1].at("k").get<int>() != k + 1 || k < 1) continue;
                    rows.push_back(row_from_parts(elems, k, per_k[i].at("size").get<std::uint64_t>(),
                                                  per_k[i + 1].at("size").get<std::uint64_t>()));
                }
            }
        } else {
            throw kwedge::invalid_input_error("artifact \"" + path + "\": unsupported command \"" + command +
                                              "\"");
        }
    }

    std::sort(rows.begin(), rows.end(), [](const kwedge::RatioVerdict& a, const kwedge::RatioVerdict& b) {
        return a.set != b.set ? a.set < b.set : a.k < b.k;
    });
    rows.erase(std::unique(rows.begin(), rows.end(),
                           [](const kwedge::RatioVerdict& a, const kwedge::RatioVerdict& b) {
                               return a.set == b.set && a.k == b.k;
                           }),
               rows.end());

    ojson config = base_config("report", opt);
    config["inputs"] = inputs;

    if (opt.format == "json") {
        ojson payload = ojson::array();
        for (const auto& row : rows) payload.push_back(kwedge::to_json(row));
        emit(opt, json_artifact(config, "rows", std::move(payload), opt, 0.0));
    } else if (opt.format == "csv") {
        emit(opt, csv_artifact(config, rows));
    } else {
        std::ostringstream text;
        text << "set | n | k | size_k | size_k1 | lhs_cross | rhs_cross | bound | holds\n";
        for (const auto& row : rows) {
            text << row.set.to_string() << " | " << row.set.n() << " | " << row.k << " | " << row.size_k
                 << " | " << row.size_k1 << " | " << row.lhs_cross << " | " << row.rhs_cross << " | ("
                 << (row.set.n() - row.k) << ")/(" << (row.k + 1) << ") | "
                 << (row.holds ? "true" : "false") << "\n";
        }
        emit(opt, text.str());
    }
    return kExitOk;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"k-fold restricted sumset toolkit"};
    app.set_version_flag("--version", std::string(kwedge::kVersion));
    app.require_subcommand(1);

    CommonOptions compute_opt, verify_opt, search_opt, report_opt;

    auto* compute = app.add_subcommand("compute", "Compute k-sum sets and multiplicity tables");
    add_common_flags(compute, compute_opt, true);
    std::uint32_t cap = 2;
    bool with_reps = false;
    std::uint64_t compute_threshold = kwedge::kDefaultEnumerationThreshold;
    compute->add_option("--cap", cap, "Multiplicity saturation bound")->capture_default_str();
    compute->add_flag("--reps", with_reps, "Include explicit representation lists");
    compute->add_option("--enum-threshold", compute_threshold, "Max C(n,k) for representation listing")
        ->capture_default_str();

    auto* verify = app.add_subcommand("verify", "Verify the counting-chain inequalities on instances");
    add_common_flags(verify, verify_opt, true);
    std::string strategy = "exclusion";
    std::uint64_t verify_threshold = kwedge::kDefaultEnumerationThreshold;
    bool with_structural = false;
    bool with_graphs = false;
    verify->add_option("--strategy", strategy, "Graph construction strategy")
        ->check(CLI::IsMember({"exclusion", "representations", "both"}))
        ->capture_default_str();
    verify->add_option("--enum-threshold", verify_threshold, "Max C(n,k) for the representation strategy")
        ->capture_default_str();
    verify->add_flag("--structural", with_structural, "Also run closed-form structural checks");
    verify->add_flag("--graphs", with_graphs, "Embed the full extension graphs in JSON output");

    auto* search = app.add_subcommand("search", "Search set spaces for extremal ratios and counterexamples");
    add_common_flags(search, search_opt, false);
    bool exhaustive = false, stochastic = false, prune = false;
    std::int64_t universe = 0, lo = 0, hi = 0;
    int search_n = 0, search_k = 0;
    std::uint64_t budget = 0, seed = 0, steps_per_restart = 0;
    search->add_flag("--exhaustive", exhaustive, "Enumerate all n-subsets of {1..M}");
    search->add_flag("--stochastic", stochastic, "Seeded hill climbing with restarts");
    search->add_option("--universe,-M", universe, "Universe bound M for exhaustive mode");
    search->add_option("--n,-n", search_n, "Set size")->required();
    search->add_option("--k,-k", search_k, "Sum order")->required();
    search->add_option("--budget", budget, "Evaluation budget (default: 5e7 exhaustive, 1e4 stochastic)");
    search->add_flag("--prune", prune, "Exhaustive: evaluate only affinely canonical sets");
    search->add_option("--lo", lo, "Stochastic: value range lower bound");
    search->add_option("--hi", hi, "Stochastic: value range upper bound");
    search->add_option("--seed", seed, "Stochastic: RNG seed")->capture_default_str();
    search->add_option("--steps-per-restart", steps_per_restart, "Stochastic: steps before a restart (0 = 500)");

    auto* report = app.add_subcommand("report", "Aggregate prior JSON artifacts into a ratio summary");
    add_common_flags(report, report_opt, false);
    std::vector<std::string> report_inputs;
    report->add_option("inputs", report_inputs, "JSON artifacts from compute/verify/search")->required();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? kExitOk : kExitInvalidInput;
    }

    const CommonOptions& opt = compute->parsed()  ? compute_opt
                               : verify->parsed() ? verify_opt
                               : search->parsed() ? search_opt
                                                  : report_opt;
#ifdef _OPENMP
    if (opt.threads > 0) omp_set_num_threads(opt.threads);
#endif

    try {
        if (compute->parsed()) return run_compute(compute_opt, cap, with_reps, compute_threshold);
        if (verify->parsed()) {
            return run_verify(verify_opt, strategy, verify_threshold, with_structural, with_graphs);
        }
        if (search->parsed()) {
            if (budget == 0) budget = exhaustive ? 50'000'000 : 10'000;
            return run_search(search_opt, exhaustive, stochastic, universe, search_n, search_k, budget, prune,
                              lo, hi, seed, steps_per_restart);
        }
        return run_report(report_opt, report_inputs);
    } catch (const kwedge::budget_exceeded_error& e) {
        std::cerr << "budget exceeded: " << e.what() << "\n";
        return kExitBudget;
    } catch (const kwedge::invalid_input_error& e) {
        std::cerr << "invalid input: " << e.what() << "\n";
        return kExitInvalidInput;
    } catch (const kwedge::overflow_error& e) {
        std::cerr << "invalid input (overflow): " << e.what() << "\n";
        return kExitInvalidInput;
    } catch (const std::exception& e) {
        std::cerr << "internal error: " << e.what() << "\n";
        return kExitInternal;
    }
}
