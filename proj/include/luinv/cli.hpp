#pragma once

#include <iosfwd>
#include <span>
#include <string>

namespace luinv::cli {

// Exit codes.
inline constexpr int kOk = 0;
inline constexpr int kUsageError = 2;       // also unreadable or malformed state files
inline constexpr int kBoundRefused = 3;    // enumeration limit exceeded
inline constexpr int kAssertionFailed = 4; // a mathematical identity failed at runtime

/// Runs one subcommand. `args` excludes the program name.
int run(std::span<const std::string> args, std::ostream& out, std::ostream& err);

/// "%.9f" in the C locale, with negative zero printed as zero.
std::string fixed9(double x);

}  // namespace luinv::cli
