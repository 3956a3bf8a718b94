#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace surfbasis::cli {

enum ExitCode { kOk = 0, kInputError = 2, kVerifyFailed = 3, kUnsupported = 4 };

/// Runs one command line (args excludes the program name).
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace surfbasis::cli
