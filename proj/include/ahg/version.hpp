#pragma once

namespace ahg {

inline constexpr const char* kToolName = "ahgraph";
inline constexpr const char* kToolVersion = "1.0.0";
inline constexpr int kFormatVersion = 1;

}  // namespace ahg
