#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace towers {

/// Exit statuses of the command-line tool.
enum ExitStatus : int {
    kExitOk = 0,
    kExitArgument = 2,
    kExitNoRecurrence = 3,
    kExitSingular = 4,
    kExitInconsistent = 5,
};

/// Runs one `towers` invocation. `args` excludes the program name.
/// Results go to `out` (or the --out file), diagnostics to `err`.
int run_command(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace towers
