#pragma once

#include <iosfwd>

namespace ycoupler::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitComputation = 1;
inline constexpr int kExitUsage = 2;

/// Environment variable holding the default tolerance; --tol overrides it.
inline constexpr const char* kTolEnv = "YCOUPLER_TOL";

/// Dispatches `device`, `compose`, `sweep`, `hom` and `verify`.
/// Results go to `out` (or the --output file), diagnostics to `err`.
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace ycoupler::cli
