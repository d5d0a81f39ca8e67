#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace fibrecheck::cli {

enum ExitCode : int {
  kOk = 0,
  kInputError = 1,
  kUnsupported = 2,
  kResourceLimit = 3,
};

// Runs the command line tool. args excludes the program name.
int run(const std::vector<std::string>& args, std::istream& in, std::ostream& out,
        std::ostream& err);

}  // namespace fibrecheck::cli
