#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace tdc::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitViolated = 1;
inline constexpr int kExitParse = 2;
inline constexpr int kExitCap = 3;
inline constexpr int kExitUndefined = 4;

/// Runs the command line `args` (args[0] is the program name) against the
/// given streams and returns the process exit code.
int run(const std::vector<std::string>& args, std::istream& in, std::ostream& out, std::ostream& err);

}  // namespace tdc::cli
