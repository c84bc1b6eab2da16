#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace binlab::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitFailure = 1;
inline constexpr int kExitUsage = 2;

/// Environment variable holding the default --format.
inline constexpr const char* kFormatEnv = "BINLAB_FORMAT";

/// Runs one invocation; args exclude the program name. Records go to `out`
/// (or --output), summaries and diagnostics to `err`.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace binlab::cli
