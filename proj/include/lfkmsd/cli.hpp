#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace lfkmsd::cli {

enum ExitCode : int {
  kSuccess = 0,
  kUsage = 2,
  kRuntime = 3,
};

/// Entry point of the `lfkmsd` tool with subcommands `detect`, `generate`
/// and `evaluate`. `args[0]` is the program name.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace lfkmsd::cli
