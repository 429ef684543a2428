#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "kwedge/integer_set.hpp"

namespace kwedge {

/// Inclusive k range. Parsed from "3" or "1..4".
struct KRange {
    int lo = 0;
    int hi = 0;
};

KRange parse_k_range(std::string_view text);

/// Set-corpus file: one set per line, comma-separated integers, '#' starts a
/// comment, blank lines ignored.
std::vector<IntegerSet> read_sets_file(const std::string& path);

} // namespace kwedge
