#pragma once

#include <ostream>

namespace jsr::cli {

/// Process exit codes of the `jsr` tool.
enum ExitCode : int {
    kConverged = 0,
    kReducible = 2,
    kMaxIterations = 3,
    kInputError = 4,
};

/// Entry point of the `jsr` command; writes results to `out` and diagnostics to `err`.
int main(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace jsr::cli
