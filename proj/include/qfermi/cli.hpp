#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace qfermi::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitCheckFailed = 1;
inline constexpr int kExitUsage = 2;

/// Runs one command. `args` excludes the program name. Output is written
/// to `out` only once the whole result is assembled; diagnostics go to `err`.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace qfermi::cli
