#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace kltgraph::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitVerificationFailed = 1;
inline constexpr int kExitUsage = 2;

/// Runs one subcommand. `args` excludes the program name. Results go to
/// `out`, diagnostics and sweep progress to `err`.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace kltgraph::cli
