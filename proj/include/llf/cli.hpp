#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace llf {

inline constexpr int kExitOk = 0;
inline constexpr int kExitIo = 1;
inline constexpr int kExitValidation = 2;
inline constexpr int kExitInternal = 3;

/// Parses and runs one CLI invocation (without the program name).
/// Subcommands: run, sweep, sim, bench.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace llf
