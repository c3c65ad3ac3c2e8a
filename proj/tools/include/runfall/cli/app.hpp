#pragma once

#include <ostream>
#include <span>
#include <string>

namespace runfall::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitUsage = 1;
inline constexpr int kExitData = 2;

/// Entry point of the `runfall` tool without argv[0]. Subcommands: run, art,
/// targets, ecdf, best, plot.
int run_cli(std::span<const std::string> args, std::ostream& out, std::ostream& err);

}  // namespace runfall::cli
