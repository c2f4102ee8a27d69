#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace qgi::cli {

enum ExitCode : int {
  kOk = 0,
  kInputError = 2,
  kCapExceeded = 3,
  kInternalError = 4,
};

/// Runs one command line (args excludes the program name). Normal output goes
/// to `out`, diagnostics to `err`; the return value is the process exit code.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace qgi::cli
