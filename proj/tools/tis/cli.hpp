#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace tis::cli {

enum ExitCode : int {
  kYes = 0,
  kNo = 1,
  kInputError = 2,
  kLimit = 3,
};

/// Runs one `tis` invocation; `args` excludes the program name.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

} // namespace tis::cli
