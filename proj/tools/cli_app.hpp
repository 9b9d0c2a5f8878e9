#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace syllogos::cli {

/// Exit codes shared by every subcommand. `check` returns kCounter for a
/// countermodel; every command returns kError on parse, structure or engine
/// errors and on an undetermined verdict.
inline constexpr int kOk = 0;
inline constexpr int kCounter = 1;
inline constexpr int kError = 2;

/// Runs the command line `args` (args[0] is the program name).
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace syllogos::cli
