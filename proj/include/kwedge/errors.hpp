#pragma once

#include <stdexcept>
#include <string>

namespace kwedge {

// Unusable arguments: malformed set text, k out of range, generator
// parameters that cannot produce a valid set.
class invalid_input_error : public std::runtime_error {
public:
    explicit invalid_input_error(const std::string& what) : std::runtime_error(what) {}
};

// A computation would exceed a configured budget (enumeration threshold,
// oracle threshold, search budget, DP memory guard). Raised before any
// partial work is emitted.
class budget_exceeded_error : public std::runtime_error {
public:
    explicit budget_exceeded_error(const std::string& what) : std::runtime_error(what) {}
};

// 64-bit signed arithmetic would wrap. Never silently ignored.
class overflow_error : public std::runtime_error {
public:
    explicit overflow_error(const std::string& what) : std::runtime_error(what) {}
};

} // namespace kwedge
