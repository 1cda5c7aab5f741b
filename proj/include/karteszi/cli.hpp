#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace karteszi::cli {

enum ExitCode : int {
  kOk = 0,
  kFailure = 1,      // usage or any other error
  kExceptional = 2,  // extra incidences detected (check, classify)
  kAmbiguous = 3,    // tolerance band hit
};

/// Runs the command line; `args` excludes the program name.
int cli_main(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace karteszi::cli
