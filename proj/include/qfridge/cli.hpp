// cli.hpp — Entry point of the qfridge command-line tool

#pragma once

#include <iosfwd>

namespace qfridge::cli {

inline constexpr int exit_ok = 0;
inline constexpr int exit_usage = 2;
inline constexpr int exit_partial = 3;
inline constexpr int exit_failure = 4;

/// Subcommands map, scan, nscale and check-conditions. Returns the process exit code.
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

} // namespace qfridge::cli
