#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace interlace::cli {

enum ExitCode : int { kOk = 0, kInputError = 1, kVerificationFailed = 2 };

/// Runs the command line given as args (args[0] is the program name),
/// reading "-" inputs from in. Returns the process exit code.
int run(const std::vector<std::string>& args, std::istream& in, std::ostream& out, std::ostream& err);

}  // namespace interlace::cli
