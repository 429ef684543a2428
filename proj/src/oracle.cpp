#include "kwedge/oracle.hpp"

#include <string>

#include "kwedge/binomial.hpp"
#include "kwedge/errors.hpp"

namespace kwedge {

namespace {

// Plain choose/skip recursion; kept deliberately separate from the DP path.
void enumerate(const std::vector<std::int64_t>& e, std::size_t pos, int remaining, std::int64_t partial,
               std::map<std::int64_t, std::uint64_t>& mult) {
    if (remaining == 0) {
        ++mult[partial];
        return;
    }
    if (e.size() - pos < static_cast<std::size_t>(remaining)) return;
    enumerate(e, pos + 1, remaining - 1, partial + e[pos], mult);
    enumerate(e, pos + 1, remaining, partial, mult);
}

} // namespace

OracleResult brute_force_oracle(const IntegerSet& A, int k, std::uint64_t threshold) {
    const int n = A.n();
    if (k < 0 || k > n) {
        throw invalid_input_error("k out of range: k=" + std::to_string(k) + " but n=" + std::to_string(n));
    }
    const std::uint64_t count = binomial_capped(n, k, threshold == UINT64_MAX ? UINT64_MAX : threshold + 1);
    if (count > threshold) {
        throw budget_exceeded_error("C(" + std::to_string(n) + "," + std::to_string(k) +
                                    ") exceeds oracle threshold " + std::to_string(threshold));
    }

    OracleResult result;
    enumerate(A.elements(), 0, k, 0, result.multiplicity);
    result.sums.reserve(result.multiplicity.size());
    for (const auto& [sum, m] : result.multiplicity) result.sums.push_back(sum);
    return result;
}

} // namespace kwedge
