#pragma once

// Command-line front end. Exit codes: 0 success, 1 verification failure,
// 2 usage error, 3 enumeration refused by the limit.

#include <iosfwd>
#include <string>
#include <vector>

namespace schubss {

inline constexpr int kExitOk = 0;
inline constexpr int kExitFailure = 1;
inline constexpr int kExitUsage = 2;
inline constexpr int kExitLimit = 3;

/// args excludes the program name.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace schubss
