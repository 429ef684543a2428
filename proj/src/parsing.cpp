#include "kwedge/parsing.hpp"

#include <charconv>
#include <fstream>

#include "kwedge/errors.hpp"

namespace kwedge {

KRange parse_k_range(std::string_view text) {
    auto parse_int = [&](std::string_view token) {
        int value = 0;
        auto [ptr, ec] = std::from_chars(token.data(), token.data() + token.size(), value);
        if (ec != std::errc{} || ptr != token.data() + token.size()) {
            throw invalid_input_error("cannot parse k range \"" + std::string(text) +
                                      "\" (expected K or A..B)");
        }
        return value;
    };

    const std::size_t dots = text.find("..");
    KRange range;
    if (dots == std::string_view::npos) {
        range.lo = range.hi = parse_int(text);
    } else {
        range.lo = parse_int(text.substr(0, dots));
        range.hi = parse_int(text.substr(dots + 2));
    }
    if (range.lo > range.hi) {
        throw invalid_input_error("empty k range \"" + std::string(text) + "\"");
    }
    return range;
}

std::vector<IntegerSet> read_sets_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw invalid_input_error("cannot open set file \"" + path + "\"");

    std::vector<IntegerSet> sets;
    std::string line;
    std::size_t lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        const std::size_t hash = line.find('#');
        if (hash != std::string::npos) line.resize(hash);
        std::string_view view = line;
        while (!view.empty() && (view.front() == ' ' || view.front() == '\t' || view.front() == '\r')) {
            view.remove_prefix(1);
        }
        while (!view.empty() && (view.back() == ' ' || view.back() == '\t' || view.back() == '\r')) {
            view.remove_suffix(1);
        }
        if (view.empty()) continue;
        try {
            sets.push_back(IntegerSet::parse(view));
        } catch (const invalid_input_error& e) {
            throw invalid_input_error(path + ":" + std::to_string(lineno) + ": " + e.what());
        }
    }
    if (sets.empty()) throw invalid_input_error("set file \"" + path + "\" contains no sets");
    return sets;
}

} // namespace kwedge
