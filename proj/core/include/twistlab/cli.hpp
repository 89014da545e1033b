#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace twistlab {

// Exit codes: 0 success, 1 verification failure, 2 usage/parse/schema error,
// 3 size bound exceeded.
inline constexpr int kExitOk = 0;
inline constexpr int kExitVerificationFailed = 1;
inline constexpr int kExitUsage = 2;
inline constexpr int kExitSizeBound = 3;

// Runs the twistlab command line. `args` excludes the program name.
int run_cli(const std::vector<std::string>& args, std::ostream& out,
            std::ostream& err);

}  // namespace twistlab
