#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace vstring::cli {

enum ExitCode : int { kOk = 0, kUsage = 1, kValidation = 2, kFalsified = 3 };

// Runs one command line (args excludes the program name) and returns the
// process exit status.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace vstring::cli
