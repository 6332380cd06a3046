#pragma once

#include <string>
#include <vector>

namespace vspace::cli {

/// 0 = success / all checks hold, 1 = a check failed (report has a witness),
/// 2 = input or usage error.
struct CommandOutcome {
  int exit_code = 0;
  std::string report;
};

/// argv excludes the program name.
CommandOutcome run(const std::vector<std::string>& args);

}  // namespace vspace::cli
