#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace mimcount::cli {

enum ExitCode : int { kOk = 0, kBoundViolation = 1, kUsage = 2, kMalformedInput = 3 };

/// Runs one command line (without the program name). Output goes to `out`;
/// diagnostics and progress go to `err`.
int run(const std::vector<std::string>& args, std::istream& in, std::ostream& out, std::ostream& err);

}  // namespace mimcount::cli
