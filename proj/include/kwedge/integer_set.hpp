#pragma once

#include <compare>
#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

namespace kwedge {

/// A finite set of distinct 64-bit integers, stored strictly increasing.
///
/// Construction validates that n * max|a_i| fits in int64_t, so every sum
/// of up to n elements is representable; downstream sum accumulation can
/// never wrap. Duplicate inputs are rejected, not deduplicated: silently
/// changing n would corrupt every count built on top of the set.
class IntegerSet {
public:
    explicit IntegerSet(std::vector<std::int64_t> elements);

    /// Parses the canonical textual form: comma-separated integers ("1,2,4,8").
    static IntegerSet parse(std::string_view text);

    int n() const { return static_cast<int>(elems_.size()); }
    const std::vector<std::int64_t>& elements() const { return elems_; }

    std::int64_t min() const { return elems_.front(); }
    std::int64_t max() const { return elems_.back(); }
    std::int64_t total() const;

    bool contains(std::int64_t v) const;

    /// The (n-1)-element set A \ {v}; v must be present.
    IntegerSet without(std::int64_t v) const;

    std::string to_string() const;

    bool operator==(const IntegerSet&) const = default;
    auto operator<=>(const IntegerSet& other) const { return elems_ <=> other.elems_; }

private:
    std::vector<std::int64_t> elems_;
};

} // namespace kwedge
