#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace farey::cli {

inline constexpr int kExitPass = 0;
inline constexpr int kExitFailed = 1;
inline constexpr int kExitUsage = 2;

// args excludes the program name.
int runCli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);
int runCli(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace farey::cli
