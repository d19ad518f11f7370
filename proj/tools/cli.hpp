#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace septree::cli {

/// Exit codes shared by every subcommand.
enum ExitCode : int {
    kOk = 0,
    kAxiomViolation = 1,
    kInputError = 2,
    kConsistencyError = 3,
    kOracleMismatch = 4,
};

/// Runs the command line `args` (without the program name).
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace septree::cli
