#pragma once

namespace moco {

inline constexpr const char* kToolName = "moco";
inline constexpr const char* kVersion = "0.1.0";

}  // namespace moco
