// Times the OpenMP kernels against their serial reference paths:
// exclusion-DP graph construction and exhaustive ratio search.

#include <chrono>
#include <cstdio>

#ifdef _OPENMP
#include <omp.h>
#endif

#include "kwedge/extension_graph.hpp"
#include "kwedge/generators.hpp"
#include "kwedge/search.hpp"
#include "kwedge/sumset.hpp"

namespace {

using clock_type = std::chrono::steady_clock;

double seconds_since(clock_type::time_point start) {
    return std::chrono::duration<double>(clock_type::now() - start).count();
}

double time_graph_build(const kwedge::IntegerSet& A, int k, bool parallel) {
    kwedge::GraphBuildOptions opt;
    opt.parallel = parallel;
    const auto start = clock_type::now();
    const auto g = kwedge::build_extension_graph(A, k, opt);
    const double elapsed = seconds_since(start);
    std::printf("    e(G)=%lld e(H)=%lld\n", static_cast<long long>(g.e_G()), static_cast<long long>(g.e_H()));
    return elapsed;
}

double time_search(std::int64_t M, int n, int k, bool parallel) {
    kwedge::ExhaustiveParams params;
    params.universe_M = M;
    params.n = n;
    params.k = k;
    params.parallel = parallel;
    const auto start = clock_type::now();
    const auto report = kwedge::exhaustive_search(params);
    const double elapsed = seconds_since(start);
    std::printf("    %llu instances, best %s\n", static_cast<unsigned long long>(report.instances_checked),
                report.best ? report.best->set.to_string().c_str() : "-");
    return elapsed;
}

} // namespace

int main() {
#ifdef _OPENMP
    std::printf("OpenMP enabled, max threads %d\n", omp_get_max_threads());
#else
    std::printf("OpenMP not available; both columns run serially\n");
#endif

    std::printf("\nksum_set throughput (n=100, k=10, values in [-1e5, 1e5]):\n");
    {
        const auto A = kwedge::make_random_set(100, -100000, 100000, 99);
        const auto start = clock_type::now();
        const auto sums = kwedge::ksum_set(A, 10);
        std::printf("  |10^A| = %zu in %.3f s\n", sums.size(), seconds_since(start));
    }

    std::printf("\nexclusion-DP graph build, serial vs parallel:\n");
    for (int n : {12, 14}) {
        const auto A = kwedge::make_random_set(n, -100000, 100000, 7);
        const int k = 4;
        std::printf("  n=%d k=%d serial:\n", n, k);
        const double serial = time_graph_build(A, k, false);
        std::printf("  n=%d k=%d parallel:\n", n, k);
        const double parallel = time_graph_build(A, k, true);
        std::printf("  serial %.3f s, parallel %.3f s, speedup %.2fx\n", serial, parallel, serial / parallel);
    }

    std::printf("\nexhaustive ratio search, serial vs parallel:\n");
    {
        const std::int64_t M = 18;
        const int n = 9, k = 2;
        std::printf("  M=%lld n=%d k=%d serial:\n", static_cast<long long>(M), n, k);
        const double serial = time_search(M, n, k, false);
        std::printf("  M=%lld n=%d k=%d parallel:\n", static_cast<long long>(M), n, k);
        const double parallel = time_search(M, n, k, true);
        std::printf("  serial %.3f s, parallel %.3f s, speedup %.2fx\n", serial, parallel, serial / parallel);
    }
    return 0;
}
