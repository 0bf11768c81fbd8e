#pragma once

#include <iosfwd>

namespace curvelab::service {

inline constexpr int kExitOk = 0;
inline constexpr int kExitUsage = 1;
inline constexpr int kExitComputation = 2;

/// The curvelab command line. Results go to `out`, one-line diagnostics to `err`.
int cli_main(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace curvelab::service
