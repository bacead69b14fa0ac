#pragma once

#include <iosfwd>

namespace itergroup::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitUsage = 1;
inline constexpr int kExitViolation = 2;

/// Runs one subcommand. Results go to `out` (or the files named by --out),
/// diagnostics to `err`.
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace itergroup::cli
