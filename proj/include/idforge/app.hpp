#pragma once

#include <string>
#include <vector>

namespace idforge {

struct RunResult {
  int exit_code = 0;  // 0 ok, 1 domain error, 2 usage error
  std::string out;
  std::string err;
};

/// Runs one idforge command. `args` excludes the program name. The
/// environment variable IDFORGE_DEFAULT_PREC, when set, replaces the
/// default of every --prec option.
RunResult run(const std::vector<std::string>& args);

}  // namespace idforge
