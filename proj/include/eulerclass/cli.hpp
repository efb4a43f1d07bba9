#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace eulerclass::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitFailure = 1;
inline constexpr int kExitUsage = 2;

inline constexpr std::size_t kDefaultOrder = 48;

/// Runs one invocation; args excludes the program name. Returns the exit code.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace eulerclass::cli
