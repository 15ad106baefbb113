#pragma once

// The gpcode command line, callable in-process.

#include <ostream>
#include <string>
#include <vector>

namespace gpcode::cli {

enum ExitCode : int {
  ok = 0,
  usage = 1,
  precondition = 2,
  mismatch = 3,
};

/// args excludes the program name.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace gpcode::cli
