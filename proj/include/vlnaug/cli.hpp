#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace vlnaug::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitValidationFailed = 1;
inline constexpr int kExitUsage = 2;

// Runs one subcommand. `args[0]` is the program name. Diagnostics go to
// `err`; data is only ever written to the files named by the flags.
int run(const std::vector<std::string>& args, std::ostream& err);

}  // namespace vlnaug::cli
