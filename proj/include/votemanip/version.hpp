#pragma once

namespace votemanip {

inline constexpr const char* kToolName = "votemanip";
inline constexpr const char* kToolVersion = "0.1.0";

}  // namespace votemanip
