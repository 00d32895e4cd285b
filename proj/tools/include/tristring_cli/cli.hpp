#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace tristring::cli {

// Exit codes shared by every subcommand.
inline constexpr int kOk = 0;
inline constexpr int kUsage = 1;
inline constexpr int kInvalidInput = 2;
inline constexpr int kIoFailure = 3;
inline constexpr int kDisconnected = 4;

/// Runs the tool on args (args[0] is the program name). Normal output goes to out,
/// diagnostics to err.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

/// Worker count from TRISTRING_THREADS, capped by the available parallelism.
unsigned worker_count();

}  // namespace tristring::cli
