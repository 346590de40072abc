#pragma once

#include <ostream>
#include <span>
#include <string>
#include <vector>

namespace oddtree::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitError = 1;
inline constexpr int kExitSizeGuard = 2;
inline constexpr int kExitMismatch = 3;

/// Entry point shared by the executable and the tests. args[0] is the
/// program name. Nothing is written to `out` unless the command succeeds
/// (or, for verify, completes its comparison).
int run(std::span<const std::string> args, std::ostream& out, std::ostream& err);

}  // namespace oddtree::cli
