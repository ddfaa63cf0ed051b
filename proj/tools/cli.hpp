#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace blindtm::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitDisagreement = 1;
inline constexpr int kExitUsage = 2;
inline constexpr int kExitGuard = 3;

/// Runs one command line (args excludes the program name). The verdict goes
/// to `out`, diagnostics to `err`.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

} // namespace blindtm::cli
