#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace apnkit::cli {

// Exit codes: 0 success, 1 check failure, 2 usage or configuration error.
inline constexpr int kExitOk = 0;
inline constexpr int kExitCheckFailed = 1;
inline constexpr int kExitUsage = 2;

// args excludes the program name.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace apnkit::cli
