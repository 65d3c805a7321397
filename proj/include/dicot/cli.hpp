#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace dicot::cli {

/// Exit statuses of `run`.
inline constexpr int kOk = 0;
inline constexpr int kDomainError = 1;
inline constexpr int kUsageError = 2;

/// Runs one command line; `args[0]` is the program name.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace dicot::cli
