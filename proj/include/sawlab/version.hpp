#pragma once

namespace sawlab {

inline constexpr const char* version() { return "0.1.0"; }

}  // namespace sawlab
