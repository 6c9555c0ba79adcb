#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace hqcs::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitFailure = 1;
inline constexpr int kExitUsage = 2;

/// Environment variable naming the default parameter set.
inline constexpr const char* kParamsEnv = "HQCS_PARAMS";

/// Runs one command line (without the program name). Returns the process
/// exit code: 0 success, 1 failed check or internal error, 2 bad arguments.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace hqcs::cli
