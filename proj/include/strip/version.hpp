#pragma once

namespace strip {

inline constexpr const char* version_string = "strip-radius 0.1.0";

}  // namespace strip
