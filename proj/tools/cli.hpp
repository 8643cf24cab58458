#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace idist::cli {

/// Exit codes: 0 every check passed, 1 a check failed or was skipped,
/// 2 usage, configuration or cap error.
inline constexpr int kExitPass = 0;
inline constexpr int kExitFail = 1;
inline constexpr int kExitUsage = 2;

/// Runs one command line (args excludes the program name).
int run(const std::vector<std::string>& args, std::istream& in, std::ostream& out,
        std::ostream& err);

}  // namespace idist::cli
