#include "kwedge/sumset.hpp"

#include <algorithm>
#include <cassert>
#include <numeric>
#include <span>

#include "kwedge/binomial.hpp"
#include "kwedge/checked.hpp"
#include "kwedge/errors.hpp"

namespace kwedge {

namespace {

// Per-layer sum range. Layer j holds sums of exactly j distinct elements and
// covers [lo, lo+width): lo is the sum of the j smallest elements, the top
// the sum of the j largest. All layers stay valid for every prefix of the
// ascending element order, so one allocation serves the whole pass.
struct Layout {
    std::int64_t lo = 0;
    std::int64_t width = 1;
};

std::vector<Layout> make_layouts(std::span<const std::int64_t> elems, int k) {
    std::vector<Layout> layouts(static_cast<std::size_t>(k) + 1);
    const int n = static_cast<int>(elems.size());
    std::int64_t lo = 0;
    std::int64_t hi = 0;
    for (int j = 1; j <= k; ++j) {
        lo = checked_add(lo, elems[static_cast<std::size_t>(j - 1)]);
        hi = checked_add(hi, elems[static_cast<std::size_t>(n - j)]);
        layouts[static_cast<std::size_t>(j)] = {lo, hi - lo + 1};
    }
    return layouts;
}

// Refuse allocations past ~2 GiB; exponential inputs (large GPs) can push
// the value spread far beyond anything worth materializing.
constexpr std::uint64_t kDpByteBudget = 1ull << 31;

void check_budget(const std::vector<Layout>& layouts, std::uint64_t bytes_per_slot_num,
                  std::uint64_t bytes_per_slot_den) {
    unsigned __int128 total = 0;
    for (const Layout& l : layouts) {
        total += (static_cast<unsigned __int128>(l.width) * bytes_per_slot_num + bytes_per_slot_den - 1) /
                 bytes_per_slot_den;
    }
    if (total > kDpByteBudget) {
        throw budget_exceeded_error("sum range too large: DP layers need more than " +
                                    std::to_string(kDpByteBudget >> 20) + " MiB");
    }
}

void or_shift(std::vector<std::uint64_t>& dst, const std::vector<std::uint64_t>& src, std::int64_t shift) {
    assert(shift >= 0);
    const std::size_t q = static_cast<std::size_t>(shift >> 6);
    const unsigned r = static_cast<unsigned>(shift & 63);
    const std::size_t dw = dst.size();
    for (std::size_t w = 0, sw = src.size(); w < sw; ++w) {
        const std::uint64_t x = src[w];
        if (x == 0) continue;
        const std::size_t base = w + q;
        // Set bits always land inside the destination range; only zero
        // padding can fall off the end.
        if (base >= dw) break;
        dst[base] |= (r == 0) ? x : (x << r);
        if (r != 0 && base + 1 < dw) dst[base + 1] |= x >> (64 - r);
    }
}

std::vector<std::int64_t> ksum_values(std::span<const std::int64_t> elems, int k) {
    if (k == 0) return {0};
    const int n = static_cast<int>(elems.size());
    const auto layouts = make_layouts(elems, k);
    check_budget(layouts, 1, 8);

    std::vector<std::vector<std::uint64_t>> layers(static_cast<std::size_t>(k) + 1);
    for (int j = 0; j <= k; ++j) {
        layers[static_cast<std::size_t>(j)].assign(
            static_cast<std::size_t>((layouts[static_cast<std::size_t>(j)].width + 63) / 64), 0);
    }
    layers[0][0] = 1;

    for (int i = 0; i < n; ++i) {
        const int jmax = std::min(k, i + 1);
        for (int j = jmax; j >= 1; --j) {
            // elems ascending and j-1 <= i keep the shift nonnegative
            const std::int64_t shift = elems[static_cast<std::size_t>(i)] - elems[static_cast<std::size_t>(j - 1)];
            or_shift(layers[static_cast<std::size_t>(j)], layers[static_cast<std::size_t>(j - 1)], shift);
        }
    }

    const auto& top = layers[static_cast<std::size_t>(k)];
    std::vector<std::int64_t> out;
    for (std::size_t w = 0; w < top.size(); ++w) {
        std::uint64_t word = top[w];
        while (word) {
            const int b = __builtin_ctzll(word);
            out.push_back(layouts[static_cast<std::size_t>(k)].lo +
                          static_cast<std::int64_t>(w * 64 + static_cast<std::size_t>(b)));
            word &= word - 1;
        }
    }
    return out;
}

template <typename Counter>
SumMultiplicityTable mult_dp(std::span<const std::int64_t> elems, int k, std::uint32_t cap) {
    SumMultiplicityTable table;
    table.k = k;
    table.cap = cap;
    if (k == 0) {
        table.entries = {{0, 1}};
        return table;
    }
    const int n = static_cast<int>(elems.size());
    const auto layouts = make_layouts(elems, k);
    check_budget(layouts, sizeof(Counter), 1);

    std::vector<std::vector<Counter>> layers(static_cast<std::size_t>(k) + 1);
    for (int j = 0; j <= k; ++j) {
        layers[static_cast<std::size_t>(j)].assign(
            static_cast<std::size_t>(layouts[static_cast<std::size_t>(j)].width), 0);
    }
    layers[0][0] = 1;

    for (int i = 0; i < n; ++i) {
        const int jmax = std::min(k, i + 1);
        for (int j = jmax; j >= 1; --j) {
            const std::int64_t shift = elems[static_cast<std::size_t>(i)] - elems[static_cast<std::size_t>(j - 1)];
            const auto& src = layers[static_cast<std::size_t>(j - 1)];
            auto& dst = layers[static_cast<std::size_t>(j)];
            for (std::size_t p = 0; p < src.size(); ++p) {
                if (const Counter c = src[p]) {
                    Counter& d = dst[p + static_cast<std::size_t>(shift)];
                    const std::uint64_t sum = static_cast<std::uint64_t>(d) + c;
                    d = static_cast<Counter>(sum >= cap ? cap : sum);
                }
            }
        }
    }

    const auto& top = layers[static_cast<std::size_t>(k)];
    for (std::size_t p = 0; p < top.size(); ++p) {
        if (top[p]) {
            table.entries.emplace_back(layouts[static_cast<std::size_t>(k)].lo + static_cast<std::int64_t>(p),
                                       static_cast<std::uint32_t>(top[p]));
        }
    }
    return table;
}

void require_k_in_range(int k, int n) {
    if (k < 0 || k > n) {
        throw invalid_input_error("k out of range: k=" + std::to_string(k) + " but set has n=" +
                                  std::to_string(n) + " elements");
    }
}

} // namespace

std::uint32_t SumMultiplicityTable::multiplicity_of(std::int64_t sum) const {
    auto it = std::lower_bound(entries.begin(), entries.end(), sum,
                               [](const auto& entry, std::int64_t v) { return entry.first < v; });
    if (it == entries.end() || it->first != sum) return 0;
    return it->second;
}

std::vector<std::int64_t> SumMultiplicityTable::keys() const {
    std::vector<std::int64_t> out;
    out.reserve(entries.size());
    for (const auto& [sum, mult] : entries) out.push_back(sum);
    return out;
}

std::vector<std::int64_t> SumMultiplicityTable::keys_with_multiplicity_at_least(std::uint32_t m) const {
    std::vector<std::int64_t> out;
    for (const auto& [sum, mult] : entries) {
        if (mult >= m) out.push_back(sum);
    }
    return out;
}

std::vector<std::int64_t> ksum_set(const IntegerSet& A, int k) {
    require_k_in_range(k, A.n());
    return ksum_values(A.elements(), k);
}

SumMultiplicityTable ksum_multiplicity(const IntegerSet& A, int k, std::uint32_t cap,
                                       std::optional<std::int64_t> exclude) {
    if (cap < 1) throw invalid_input_error("multiplicity cap must be at least 1");
    if (!exclude) {
        require_k_in_range(k, A.n());
        const auto& elems = A.elements();
        return cap <= 0xff ? mult_dp<std::uint8_t>(elems, k, cap) : mult_dp<std::uint32_t>(elems, k, cap);
    }
    if (!A.contains(*exclude)) {
        throw invalid_input_error("exclude value " + std::to_string(*exclude) + " not in set");
    }
    std::vector<std::int64_t> rest;
    rest.reserve(static_cast<std::size_t>(A.n()) - 1);
    for (std::int64_t e : A.elements()) {
        if (e != *exclude) rest.push_back(e);
    }
    require_k_in_range(k, static_cast<int>(rest.size()));
    return cap <= 0xff ? mult_dp<std::uint8_t>(rest, k, cap) : mult_dp<std::uint32_t>(rest, k, cap);
}

RepresentationList enumerate_representations(const IntegerSet& A, int k, std::uint64_t threshold) {
    const int n = A.n();
    require_k_in_range(k, n);
    const std::uint64_t count = binomial_capped(n, k, threshold == UINT64_MAX ? UINT64_MAX : threshold + 1);
    if (count > threshold) {
        throw budget_exceeded_error("C(" + std::to_string(n) + "," + std::to_string(k) +
                                    ") exceeds enumeration threshold " + std::to_string(threshold));
    }

    RepresentationList out;
    out.k = k;
    if (k == 0) {
        out.groups[0] = {{}};
        out.total_subsets = 1;
        return out;
    }

    const auto& e = A.elements();
    std::vector<int> idx(static_cast<std::size_t>(k));
    std::iota(idx.begin(), idx.end(), 0);
    while (true) {
        std::int64_t sum = 0;
        std::vector<std::int64_t> subset(static_cast<std::size_t>(k));
        for (int i = 0; i < k; ++i) {
            subset[static_cast<std::size_t>(i)] = e[static_cast<std::size_t>(idx[static_cast<std::size_t>(i)])];
            sum += subset[static_cast<std::size_t>(i)];
        }
        out.groups[sum].push_back(std::move(subset));
        ++out.total_subsets;

        int i = k - 1;
        while (i >= 0 && idx[static_cast<std::size_t>(i)] == n - k + i) --i;
        if (i < 0) break;
        ++idx[static_cast<std::size_t>(i)];
        for (int j = i + 1; j < k; ++j) {
            idx[static_cast<std::size_t>(j)] = idx[static_cast<std::size_t>(j - 1)] + 1;
        }
    }
    return out;
}

} // namespace kwedge
