#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace credits::cli {

enum ExitCode : int {
  kOk = 0,
  kUsageError = 1,
  kCorpusError = 2,
  kLookupFailure = 3,
};

/// Entry point of the `credits` executable. Normal output goes to `out`,
/// diagnostics and warnings to `err`.
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

/// Same, with the arguments (excluding the program name) as strings.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace credits::cli
