#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace nbperc::cli {

/// Exit codes: 0 ok, 2 usage or input error, 3 numeric failure.
inline constexpr int kExitOk = 0;
inline constexpr int kExitUsage = 2;
inline constexpr int kExitNumeric = 3;

/// Runs the command line `args` (args[0] is the program name).  Normal output
/// goes to `out` unless a command writes to a file, diagnostics to `err`.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace nbperc::cli
