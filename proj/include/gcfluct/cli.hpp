#pragma once

#include <ostream>

namespace gcfluct {

/// Process exit codes of the command-line tool.
enum ExitCode : int {
    kExitOk = 0,
    kExitCheckFailed = 1,  // a checked mathematical condition failed
    kExitUsage = 2,        // bad flags, malformed or unreadable input
};

/// Entry point of the `gcfluct` tool: verify | classify | average | unruh.
/// Output goes to `out` (or --output), diagnostics to `err`.
int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace gcfluct
