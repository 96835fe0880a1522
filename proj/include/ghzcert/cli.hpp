#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace ghzcert {

inline constexpr int kExitOk = 0;
inline constexpr int kExitVerifyFailed = 1;
inline constexpr int kExitUsage = 2;
inline constexpr int kExitInput = 3;

/// Runs the command line `args` (args[0] is the program name). Errors are
/// written to `err` as a JSON object with a stable "code" field.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace ghzcert
