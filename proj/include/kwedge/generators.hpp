#pragma once

#include <cstdint>
#include <string>
#include <string_view>

#include "kwedge/integer_set.hpp"

namespace kwedge {

/// {a0 * r^i : 0 <= i < n}. Requires a0 != 0 and integer |r| >= 2 (negative
/// ratios allowed; magnitudes then strictly increase, so elements stay
/// distinct). Overflow in any term is an error, never a wrap.
IntegerSet make_gp(int n, std::int64_t ratio, std::int64_t a0);

/// {a0 + i*d : 0 <= i < n} with d >= 1.
IntegerSet make_ap(int n, std::int64_t diff, std::int64_t a0);

/// n distinct values uniform in [lo, hi], by rejection sampling on a
/// mt19937_64 stream (see rng.hpp); identical seeds reproduce the set
/// byte-for-byte on every platform.
IntegerSet make_random_set(int n, std::int64_t lo, std::int64_t hi, std::uint64_t seed);

struct GenSpec {
    enum class Kind { Gp, Ap, Random } kind = Kind::Gp;
    int n = 0;
    std::int64_t ratio = 2;  // gp
    std::int64_t diff = 1;   // ap
    std::int64_t a0 = 1;     // gp / ap first term
    std::int64_t lo = 0, hi = 0;
    std::uint64_t seed = 0;

    std::string to_string() const;
};

/// "gp:n=5,r=2,a0=1" | "ap:n=5,d=1,a0=1" | "random:n=6,lo=-50,hi=50,seed=7"
GenSpec parse_gen_spec(std::string_view text);

IntegerSet generate(const GenSpec& spec);

} // namespace kwedge
