#pragma once

// Command-line front end. Kept separate from main() so tests can drive it.

#include <iosfwd>
#include <string>
#include <vector>

namespace pseries {

enum ExitCode : int { kExitPass = 0, kExitFailure = 1, kExitUsage = 2, kExitSizeGuard = 3 };

/// args excludes the program name.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace pseries
