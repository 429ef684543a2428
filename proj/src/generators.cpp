#include "kwedge/generators.hpp"

#include <charconv>
#include <set>

#include "kwedge/checked.hpp"
#include "kwedge/errors.hpp"
#include "kwedge/rng.hpp"

namespace kwedge {

IntegerSet make_gp(int n, std::int64_t ratio, std::int64_t a0) {
    if (n < 1) throw invalid_input_error("gp: length must be at least 1");
    if (a0 == 0) throw invalid_input_error("gp: first term must be nonzero");
    if (ratio > -2 && ratio < 2) {
        throw invalid_input_error("gp: ratio must be an integer with |r| >= 2, got " + std::to_string(ratio));
    }
    std::vector<std::int64_t> values;
    values.reserve(static_cast<std::size_t>(n));
    std::int64_t term = a0;
    values.push_back(term);
    for (int i = 1; i < n; ++i) {
        term = checked_mul(term, ratio);
        values.push_back(term);
    }
    return IntegerSet(std::move(values));
}

IntegerSet make_ap(int n, std::int64_t diff, std::int64_t a0) {
    if (n < 1) throw invalid_input_error("ap: length must be at least 1");
    if (diff < 1) throw invalid_input_error("ap: difference must be at least 1, got " + std::to_string(diff));
    std::vector<std::int64_t> values;
    values.reserve(static_cast<std::size_t>(n));
    std::int64_t term = a0;
    values.push_back(term);
    for (int i = 1; i < n; ++i) {
        term = checked_add(term, diff);
        values.push_back(term);
    }
    return IntegerSet(std::move(values));
}

IntegerSet make_random_set(int n, std::int64_t lo, std::int64_t hi, std::uint64_t seed) {
    if (n < 1) throw invalid_input_error("random: length must be at least 1");
    if (lo > hi) throw invalid_input_error("random: empty range");
    const std::uint64_t span = static_cast<std::uint64_t>(hi) - static_cast<std::uint64_t>(lo) + 1;
    if (span != 0 && span < static_cast<std::uint64_t>(n)) {
        throw invalid_input_error("random: range [" + std::to_string(lo) + "," + std::to_string(hi) +
                                  "] too small to hold " + std::to_string(n) + " distinct values");
    }

    SeededRng rng(seed);
    std::set<std::int64_t> picked;
    while (picked.size() < static_cast<std::size_t>(n)) {
        picked.insert(rng.uniform(lo, hi));
    }
    return IntegerSet(std::vector<std::int64_t>(picked.begin(), picked.end()));
}

std::string GenSpec::to_string() const {
    switch (kind) {
        case Kind::Gp:
            return "gp:n=" + std::to_string(n) + ",r=" + std::to_string(ratio) + ",a0=" + std::to_string(a0);
        case Kind::Ap:
            return "ap:n=" + std::to_string(n) + ",d=" + std::to_string(diff) + ",a0=" + std::to_string(a0);
        case Kind::Random:
            return "random:n=" + std::to_string(n) + ",lo=" + std::to_string(lo) + ",hi=" + std::to_string(hi) +
                   ",seed=" + std::to_string(seed);
    }
    return {};
}

namespace {

std::int64_t parse_i64(std::string_view token, std::string_view what) {
    std::int64_t value = 0;
    auto [ptr, ec] = std::from_chars(token.data(), token.data() + token.size(), value);
    if (ec != std::errc{} || ptr != token.data() + token.size()) {
        throw invalid_input_error("generator spec: cannot parse " + std::string(what) + " value \"" +
                                  std::string(token) + "\"");
    }
    return value;
}

} // namespace

GenSpec parse_gen_spec(std::string_view text) {
    const std::size_t colon = text.find(':');
    if (colon == std::string_view::npos) {
        throw invalid_input_error("generator spec must look like kind:key=value,... got \"" + std::string(text) +
                                  "\"");
    }
    const std::string_view kind = text.substr(0, colon);
    GenSpec spec;
    if (kind == "gp") {
        spec.kind = GenSpec::Kind::Gp;
    } else if (kind == "ap") {
        spec.kind = GenSpec::Kind::Ap;
    } else if (kind == "random") {
        spec.kind = GenSpec::Kind::Random;
    } else {
        throw invalid_input_error("unknown generator kind \"" + std::string(kind) + "\" (want gp, ap or random)");
    }

    bool have_n = false;
    std::string_view rest = text.substr(colon + 1);
    std::size_t pos = 0;
    while (pos < rest.size()) {
        std::size_t comma = rest.find(',', pos);
        if (comma == std::string_view::npos) comma = rest.size();
        const std::string_view pair = rest.substr(pos, comma - pos);
        const std::size_t eq = pair.find('=');
        if (eq == std::string_view::npos) {
            throw invalid_input_error("generator spec: expected key=value, got \"" + std::string(pair) + "\"");
        }
        const std::string_view key = pair.substr(0, eq);
        const std::string_view value = pair.substr(eq + 1);
        if (key == "n") {
            spec.n = static_cast<int>(parse_i64(value, key));
            have_n = true;
        } else if (key == "r" && spec.kind == GenSpec::Kind::Gp) {
            spec.ratio = parse_i64(value, key);
        } else if (key == "d" && spec.kind == GenSpec::Kind::Ap) {
            spec.diff = parse_i64(value, key);
        } else if (key == "a0" && spec.kind != GenSpec::Kind::Random) {
            spec.a0 = parse_i64(value, key);
        } else if (key == "lo" && spec.kind == GenSpec::Kind::Random) {
            spec.lo = parse_i64(value, key);
        } else if (key == "hi" && spec.kind == GenSpec::Kind::Random) {
            spec.hi = parse_i64(value, key);
        } else if (key == "seed" && spec.kind == GenSpec::Kind::Random) {
            spec.seed = static_cast<std::uint64_t>(parse_i64(value, key));
        } else {
            throw invalid_input_error("generator spec: unknown key \"" + std::string(key) + "\" for kind \"" +
                                      std::string(kind) + "\"");
        }
        pos = comma + 1;
    }
    if (!have_n) throw invalid_input_error("generator spec: missing n");
    return spec;
}

IntegerSet generate(const GenSpec& spec) {
    switch (spec.kind) {
        case GenSpec::Kind::Gp:
            return make_gp(spec.n, spec.ratio, spec.a0);
        case GenSpec::Kind::Ap:
            return make_ap(spec.n, spec.diff, spec.a0);
        case GenSpec::Kind::Random:
            return make_random_set(spec.n, spec.lo, spec.hi, spec.seed);
    }
    throw invalid_input_error("generator spec: unknown kind");
}

} // namespace kwedge
