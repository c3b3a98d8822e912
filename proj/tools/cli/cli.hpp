#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace polarfront::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitUsage = 2;  ///< bad flags or parameter validation
inline constexpr int kExitData = 3;   ///< unreadable, empty or inconsistent input data

/// Runs one subcommand (front | stats | slices | evt | pollution | decide |
/// serve). `args` excludes the program name.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace polarfront::cli
