#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace deep::cli {

enum ExitCode : int { kOk = 0, kVerdictFail = 1, kUsage = 2 };

/// Runs one command; `args` excludes the program name.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace deep::cli
