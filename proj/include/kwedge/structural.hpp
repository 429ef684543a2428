#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "kwedge/integer_set.hpp"

namespace kwedge {

struct StructuralCheckItem {
    std::string name;
    int k = 0;
    std::int64_t lhs = 0;
    std::int64_t rhs = 0;
    bool holds = false;
};

/// Closed-form facts checked against the computed sumset sizes:
///   - symmetry |k^A| = |(n-k)^A| for every k (always applicable);
///   - for arithmetic progressions, |k^A| = k(n-k)+1;
///   - for geometric progressions with integer |r| >= 2, |k^A| = C(n,k) and
///     equality (k+1)|(k+1)^A| = (n-k)|k^A| for 1 <= k <= n-1.
/// AP/GP shape is detected from the element pattern; negative-ratio GPs are
/// recognized by reordering on absolute value.
struct StructuralReport {
    IntegerSet set;
    std::vector<std::uint64_t> sizes;  // |k^A| for k = 0..n
    bool is_ap = false;
    std::optional<std::int64_t> ap_diff;  // absent for n == 1
    bool is_gp = false;
    std::optional<std::int64_t> gp_ratio;  // absent for n == 1
    std::vector<StructuralCheckItem> checks;
    bool all_pass = false;
};

StructuralReport structural_checks(const IntegerSet& A);

} // namespace kwedge
