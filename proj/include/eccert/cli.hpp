#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace eccert {

// Exit codes.
inline constexpr int kExitOk = 0;
inline constexpr int kExitInternal = 1;
inline constexpr int kExitParse = 2;
inline constexpr int kExitVerify = 3;
inline constexpr int kExitFingerprint = 4;

// Runs one command. `args` excludes the program name.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace eccert
