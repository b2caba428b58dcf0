#pragma once

#include <ostream>

namespace sphfun::cli {

// Exit codes.
inline constexpr int kExitOk = 0;
inline constexpr int kExitFailure = 1;  // evaluation or verification failure
inline constexpr int kExitUsage = 2;    // bad command line or configuration

// Entry point of the `sphfun` tool; tables go to `out` (unless --out is
// given), diagnostics to `err`.
int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace sphfun::cli
