#pragma once

namespace hc2d {

inline constexpr const char* version_string = "1.0.0";

} // namespace hc2d
