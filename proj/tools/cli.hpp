#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace jetob {

/// Exit codes of the command-line tool.
enum ExitCode : int { kExitOk = 0, kExitAssertion = 1, kExitInput = 2, kExitResource = 3 };

/// Runs one invocation; `args` excludes the program name.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

} // namespace jetob
