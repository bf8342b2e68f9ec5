#pragma once

#include <iosfwd>

namespace teamfuse::cli {

enum ExitCode : int {
    kSuccess = 0,
    kInternalError = 1,
    kUsage = 2,
    kNotConverged = 3,
    kIoFailure = 4,
};

/// Entry point shared by the `teamfuse` binary and the CLI tests.
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace teamfuse::cli
