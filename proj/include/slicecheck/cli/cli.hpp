#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace slicecheck::cli {

enum ExitCode : int {
    exit_ok = 0,
    exit_failure = 1,
    exit_input_error = 2,
    exit_gap = 3,
    exit_precision = 4,
    exit_rejected = 5,
};

/// Runs one command line (without the program name). Normal output goes to
/// out, diagnostics to err; the result is the process exit status.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace slicecheck::cli
