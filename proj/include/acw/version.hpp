#pragma once

namespace acw {
inline constexpr const char* kVersion = "acw 0.1.0";
}
