#include "kwedge/integer_set.hpp"

#include <algorithm>
#include <charconv>
#include <limits>

#include "kwedge/checked.hpp"
#include "kwedge/errors.hpp"

namespace kwedge {

IntegerSet::IntegerSet(std::vector<std::int64_t> elements) : elems_(std::move(elements)) {
    if (elems_.empty()) throw invalid_input_error("set must contain at least one element");
    std::sort(elems_.begin(), elems_.end());
    auto dup = std::adjacent_find(elems_.begin(), elems_.end());
    if (dup != elems_.end()) {
        throw invalid_input_error("duplicate element " + std::to_string(*dup) +
                                  ": inputs must be sets of distinct integers");
    }
    // Guarantee that any sum of up to n elements fits in int64_t.
    const std::uint64_t max_abs = std::max(abs_u64(elems_.front()), abs_u64(elems_.back()));
    const std::uint64_t limit = static_cast<std::uint64_t>(std::numeric_limits<std::int64_t>::max());
    if (max_abs != 0 && max_abs > limit / static_cast<std::uint64_t>(elems_.size())) {
        throw overflow_error("elements too large: n * max|a| would overflow 64-bit sums");
    }
}

IntegerSet IntegerSet::parse(std::string_view text) {
    std::vector<std::int64_t> values;
    std::size_t pos = 0;
    while (pos <= text.size()) {
        std::size_t comma = text.find(',', pos);
        if (comma == std::string_view::npos) comma = text.size();
        std::string_view token = text.substr(pos, comma - pos);
        while (!token.empty() && (token.front() == ' ' || token.front() == '\t')) token.remove_prefix(1);
        while (!token.empty() && (token.back() == ' ' || token.back() == '\t')) token.remove_suffix(1);
        if (token.empty()) {
            throw invalid_input_error("cannot parse set \"" + std::string(text) +
                                      "\": empty entry (expected comma-separated integers)");
        }
        std::int64_t value = 0;
        auto [ptr, ec] = std::from_chars(token.data(), token.data() + token.size(), value);
        if (ec != std::errc{} || ptr != token.data() + token.size()) {
            throw invalid_input_error("cannot parse integer \"" + std::string(token) + "\" in set \"" +
                                      std::string(text) + "\"");
        }
        values.push_back(value);
        pos = comma + 1;
        if (comma == text.size()) break;
    }
    return IntegerSet(std::move(values));
}

std::int64_t IntegerSet::total() const {
    std::int64_t sum = 0;
    for (std::int64_t v : elems_) sum = checked_add(sum, v);
    return sum;
}

bool IntegerSet::contains(std::int64_t v) const {
    return std::binary_search(elems_.begin(), elems_.end(), v);
}

IntegerSet IntegerSet::without(std::int64_t v) const {
    if (!contains(v)) throw invalid_input_error("element " + std::to_string(v) + " not in set");
    std::vector<std::int64_t> rest;
    rest.reserve(elems_.size() - 1);
    for (std::int64_t e : elems_) {
        if (e != v) rest.push_back(e);
    }
    return IntegerSet(std::move(rest));
}

std::string IntegerSet::to_string() const {
    std::string out;
    for (std::size_t i = 0; i < elems_.size(); ++i) {
        if (i) out.push_back(',');
        out += std::to_string(elems_[i]);
    }
    return out;
}

} // namespace kwedge
