#pragma once

namespace ordanova {

inline constexpr const char* kVersion = "1.0.0";

}  // namespace ordanova
