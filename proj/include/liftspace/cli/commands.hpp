#pragma once

#include <iosfwd>

namespace liftspace::cli {

enum ExitCode : int { kSuccess = 0, kCheckFailed = 1, kBadInput = 2 };

/// Parses the command line and runs one subcommand, writing results to
/// `out` and diagnostics to `err`.
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace liftspace::cli
