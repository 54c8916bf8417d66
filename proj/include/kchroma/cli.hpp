#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace kchroma::cli {

enum ExitCode : int {
  kPass = 0,
  kViolation = 1,
  kUsage = 2,
  kTheoremFalsified = 3,
};

/// Runs one command line (without the program name). Machine-readable output
/// goes to `out`, diagnostics to `err`.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

int run(int argc, char** argv);

}  // namespace kchroma::cli
