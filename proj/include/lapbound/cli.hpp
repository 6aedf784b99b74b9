#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace lapbound {

/// Exit codes of the command-line tool.
inline constexpr int kExitOk = 0;
inline constexpr int kExitCounterexample = 1;
inline constexpr int kExitUsage = 2;

/// Runs the command line `args` (without the program name). Reads graph
/// input from `in` when the input is "-".
int run_cli(const std::vector<std::string>& args, std::istream& in, std::ostream& out, std::ostream& err);

}  // namespace lapbound
