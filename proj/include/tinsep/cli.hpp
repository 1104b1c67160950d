#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace tinsep {

/// Exit codes of the command-line front end.
enum ExitCode : int {
    kExitOk = 0,
    kExitNegative = 1,
    kExitInput = 2,
    kExitGuard = 3,
    kExitInternal = 4,
};

/// Runs one command. `args` excludes the program name.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace tinsep
