#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace c4book::cli {

inline constexpr int kExitVerified = 0;
inline constexpr int kExitRefuted = 1;
inline constexpr int kExitUsage = 2;

/// Runs one command line (without the program name). Artifacts go to
/// `out`, diagnostics and the run manifest to `err`.
int dispatch(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace c4book::cli
