#pragma once

namespace kwedge {

inline constexpr const char* kVersion = "0.1.0";

} // namespace kwedge
