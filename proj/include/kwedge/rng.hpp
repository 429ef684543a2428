#pragma once

#include <cstdint>
#include <random>

namespace kwedge {

/// Deterministic random source. mt19937_64 is fully specified by the
/// standard, and the bounded draw below uses unbiased rejection instead of
/// std::uniform_int_distribution (whose value stream is implementation
/// defined), so identical seeds reproduce byte-identical runs everywhere.
class SeededRng {
public:
    explicit SeededRng(std::uint64_t seed) : engine_(seed) {}

    std::uint64_t next() { return engine_(); }

    /// Uniform in [0, bound); bound = 0 means the full 64-bit range.
    std::uint64_t bounded(std::uint64_t bound) {
        if (bound == 0) return engine_();
        const std::uint64_t threshold = (0 - bound) % bound; // 2^64 mod bound
        std::uint64_t x;
        do {
            x = engine_();
        } while (x < threshold);
        return x % bound;
    }

    /// Uniform in [lo, hi], inclusive. Correct for the full int64 range.
    std::int64_t uniform(std::int64_t lo, std::int64_t hi) {
        const std::uint64_t span =
            static_cast<std::uint64_t>(hi) - static_cast<std::uint64_t>(lo) + 1; // wraps to 0 on full range
        return static_cast<std::int64_t>(static_cast<std::uint64_t>(lo) + bounded(span));
    }

private:
    std::mt19937_64 engine_;
};

} // namespace kwedge
