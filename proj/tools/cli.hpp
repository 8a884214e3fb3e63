#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace qpbc::cli {

enum ExitCode : int { success = 0, verificationFailure = 1, usageError = 2 };

/// Runs one command line (without the program name). Records go to out,
/// diagnostics to err. Returns the process exit code.
int runCli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace qpbc::cli
