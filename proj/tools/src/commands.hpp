#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace rankmod::cli {

/// Exit statuses.
inline constexpr int kExitOk = 0;
inline constexpr int kExitInvalid = 1;
inline constexpr int kExitError = 2;

/// Runs `rmsnake` with `args` (without the program name).
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace rankmod::cli
