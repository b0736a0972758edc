#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace bihecke {

// Exit codes of the command-line front end.
inline constexpr int kExitOk = 0;
inline constexpr int kExitComputation = 1;
inline constexpr int kExitUsage = 2;

// Environment variable holding the default cache directory.
inline constexpr const char* kCacheDirVariable = "BIHECKE_CACHE_DIR";

// Runs one command line (without the program name). Results go to out,
// diagnostics and progress to err.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace bihecke
