#pragma once

#include <ostream>

namespace cdgamma::cli {

inline constexpr int kExitPass = 0;
inline constexpr int kExitAssertionFailure = 1;
inline constexpr int kExitUsage = 2;

/// Environment variable holding the default quadrature tolerance (abs and rel).
inline constexpr const char* kToleranceEnv = "CDGAMMA_TOL";

/// Entire command-line front end; main() only forwards to it.
int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

} // namespace cdgamma::cli
