#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace graphca::cli {

enum ExitCode : int { Success = 0, VerificationFailed = 1, UsageError = 2 };

/// Runs one graphca command. args excludes the program name. The JSON
/// report goes to `out`, diagnostics to `err`.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace graphca::cli
