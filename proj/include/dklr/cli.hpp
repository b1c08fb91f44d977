#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace dklr::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitCheckFailed = 1;
inline constexpr int kExitUsage = 2;
inline constexpr int kExitDomain = 3;

/// Parses `args` (without the program name), dispatches one subcommand and
/// returns the process exit status. Results go to `out`, diagnostics to
/// `err`.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace dklr::cli
