#include "kwedge/theorem.hpp"

#include <string>

#include "kwedge/checked.hpp"
#include "kwedge/errors.hpp"
#include "kwedge/sumset.hpp"

namespace kwedge {

RatioVerdict ratio_check(const IntegerSet& A, int k) {
    const int n = A.n();
    if (k < 1 || k > n - 1) {
        throw invalid_input_error("ratio check needs 1 <= k <= n-1, got k=" + std::to_string(k) +
                                  ", n=" + std::to_string(n));
    }

    RatioVerdict v{A, k};
    v.size_k = ksum_set(A, k).size();
    v.size_k1 = ksum_set(A, k + 1).size();
    v.lhs_cross = checked_mul(k + 1, static_cast<std::int64_t>(v.size_k1));
    v.rhs_cross = checked_mul(n - k, static_cast<std::int64_t>(v.size_k));
    v.holds = v.lhs_cross <= v.rhs_cross;
    v.equality = v.lhs_cross == v.rhs_cross;
    v.hyp_theorem = theorem_hypothesis(n, k);
    v.hyp_question = question_hypothesis(n, k);
    return v;
}

} // namespace kwedge
