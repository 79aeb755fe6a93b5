#pragma once
#include <iosfwd>
#include <span>
#include <string>

namespace mglpa::cli {

enum ExitCode : int { kSuccess = 0, kUsageError = 1, kRuntimeError = 2 };

/** Entry point of the `mglpa` command; argv[0] is the program name. */
int run_cli(std::span<const std::string> args, std::ostream& out, std::ostream& err);

}  // namespace mglpa::cli
