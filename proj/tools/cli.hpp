#pragma once

#include <string>
#include <vector>

namespace qcirc::cli {

struct RunResult {
  int exit_code = 0;
  std::string out;
  std::string err;
};

/// Runs one invocation. args excludes the program name. Exit codes: 0 ok,
/// 1 domain error ("error=<code>" on out), 2 usage error.
RunResult run(const std::vector<std::string>& args);

}  // namespace qcirc::cli
