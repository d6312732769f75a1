#pragma once

namespace frameinv {

inline constexpr const char* tool_name = "frameinv";
inline constexpr const char* tool_version = "0.1.0";

} // namespace frameinv
