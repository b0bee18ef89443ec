#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace weylsector {

inline constexpr int kExitOk = 0;
inline constexpr int kExitInput = 2;
inline constexpr int kExitNumerical = 3;

/// Runs the command line `args` (without the program name). JSON or CSV goes to
/// `out`, diagnostics to `err`. Returns 0, 2 on bad input or 3 on numerical failure.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace weylsector
