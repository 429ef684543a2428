#include "kwedge/structural.hpp"

#include <algorithm>

#include "kwedge/binomial.hpp"
#include "kwedge/checked.hpp"
#include "kwedge/sumset.hpp"

namespace kwedge {

namespace {

std::optional<std::int64_t> detect_ap_diff(const std::vector<std::int64_t>& e) {
    // strictly increasing input, so any common difference is >= 1
    const std::int64_t d = e[1] - e[0];
    for (std::size_t i = 2; i < e.size(); ++i) {
        if (e[i] - e[i - 1] != d) return std::nullopt;
    }
    return d;
}

// A geometric progression with integer |r| >= 2 has strictly increasing
// magnitudes, so sorting by |value| recovers the progression order even when
// the ratio is negative and the set order alternates in sign.
std::optional<std::int64_t> detect_gp_ratio(const std::vector<std::int64_t>& sorted) {
    std::vector<std::int64_t> by_mag = sorted;
    for (std::int64_t v : by_mag) {
        if (v == 0) return std::nullopt;
    }
    std::sort(by_mag.begin(), by_mag.end(),
              [](std::int64_t a, std::int64_t b) { return abs_u64(a) < abs_u64(b); });
    for (std::size_t i = 1; i < by_mag.size(); ++i) {
        if (abs_u64(by_mag[i]) == abs_u64(by_mag[i - 1])) return std::nullopt;
    }
    if (by_mag[1] % by_mag[0] != 0) return std::nullopt;
    const std::int64_t r = by_mag[1] / by_mag[0];
    if (r > -2 && r < 2) return std::nullopt;
    for (std::size_t i = 1; i < by_mag.size(); ++i) {
        if (by_mag[i] != checked_mul(by_mag[i - 1], r)) return std::nullopt;
    }
    return r;
}

} // namespace

StructuralReport structural_checks(const IntegerSet& A) {
    const int n = A.n();
    StructuralReport report{A};

    report.sizes.reserve(static_cast<std::size_t>(n) + 1);
    for (int k = 0; k <= n; ++k) {
        report.sizes.push_back(ksum_set(A, k).size());
    }

    const auto& e = A.elements();
    if (n == 1) {
        report.is_ap = true;
        report.is_gp = e.front() != 0;
    } else {
        report.ap_diff = detect_ap_diff(e);
        report.is_ap = report.ap_diff.has_value();
        report.gp_ratio = detect_gp_ratio(e);
        report.is_gp = report.gp_ratio.has_value();
    }

    report.all_pass = true;
    auto add = [&report](std::string name, int k, std::int64_t lhs, std::int64_t rhs) {
        const bool holds = lhs == rhs;
        report.checks.push_back({std::move(name), k, lhs, rhs, holds});
        report.all_pass = report.all_pass && holds;
    };

    for (int k = 0; k <= n; ++k) {
        add("symmetry", k, static_cast<std::int64_t>(report.sizes[static_cast<std::size_t>(k)]),
            static_cast<std::int64_t>(report.sizes[static_cast<std::size_t>(n - k)]));
    }

    if (report.is_ap) {
        for (int k = 0; k <= n; ++k) {
            add("ap_closed_form", k, static_cast<std::int64_t>(report.sizes[static_cast<std::size_t>(k)]),
                checked_add(checked_mul(k, n - k), 1));
        }
    }

    if (report.is_gp) {
        for (int k = 0; k <= n; ++k) {
            add("gp_distinct_sums", k, static_cast<std::int64_t>(report.sizes[static_cast<std::size_t>(k)]),
                static_cast<std::int64_t>(binomial_capped(n, k)));
        }
        for (int k = 1; k <= n - 1; ++k) {
            add("gp_ratio_equality", k,
                checked_mul(k + 1, static_cast<std::int64_t>(report.sizes[static_cast<std::size_t>(k) + 1])),
                checked_mul(n - k, static_cast<std::int64_t>(report.sizes[static_cast<std::size_t>(k)])));
        }
    }

    return report;
}

} // namespace kwedge
