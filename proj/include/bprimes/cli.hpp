#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace bprimes::cli {

/// Exit statuses: 0 success, 1 a mathematical hypothesis was violated,
/// 2 the arguments could not be parsed.
inline constexpr int kExitOk = 0;
inline constexpr int kExitHypothesis = 1;
inline constexpr int kExitUsage = 2;

/// Runs one command. `args` excludes the program name.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace bprimes::cli
