#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace quadbox {

/// Exit codes of the quadbox command.
enum ExitCode : int { kExitOk = 0, kExitIrreducible = 1, kExitUsage = 2 };

/// Runs the quadbox command line; args[0] is the program name.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace quadbox
