#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace homly {

/// Exit codes of the command-line tool.
enum ExitCode : int {
  kExitOk = 0,       // suite passed / construction succeeded
  kExitFailed = 1,   // suite failed, or a construction's hypothesis check failed
  kExitUsage = 2,    // usage or input error
};

/// Runs one command line (without the program name). "-" as a file argument
/// reads `in`; outputs without -o go to `out`; diagnostics go to `err`.
int run_cli(const std::vector<std::string>& args, std::istream& in, std::ostream& out, std::ostream& err);

}  // namespace homly
