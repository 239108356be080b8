#pragma once

// The `circalg` command line. run() takes the arguments after the program
// name and returns the process exit status.

#include <iosfwd>
#include <string>
#include <vector>

namespace circalg::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitDomain = 1;  // singular input, non-member, failed check
inline constexpr int kExitUsage = 2;   // bad flags, malformed documents

int run(const std::vector<std::string>& args, std::istream& in, std::ostream& out, std::ostream& err);

}  // namespace circalg::cli
