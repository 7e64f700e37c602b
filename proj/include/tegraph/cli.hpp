#pragma once

#include <ostream>

namespace tegraph::cli {

inline constexpr const char* kToolVersion = "tegraph 0.1.0";

/// Exit codes: 0 success, 1 invalid graph or failed computation,
/// 2 unreadable or malformed input (including bad command lines).
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace tegraph::cli
