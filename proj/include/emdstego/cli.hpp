#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace emdstego::cli {

/// Exit status contract of the command-line tool.
enum ExitCode : int { kOk = 0, kUsage = 2, kData = 3 };

/// Runs one command line (args excludes the program name).
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace emdstego::cli
