#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace terracini::cli {

enum ExitCode : int {
  kSuccess = 0,
  kUsage = 1,
  kGuard = 2,
  kInconsistent = 3,
};

// Entry point shared by the executable and the tests. `args` excludes the
// program name. TERRACINI_SEED in the environment replaces the default seed.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

// Parses "a..b", "a,b,c" or "a" into a list of values.
std::vector<unsigned> parse_range(const std::string& spec);

}  // namespace terracini::cli
