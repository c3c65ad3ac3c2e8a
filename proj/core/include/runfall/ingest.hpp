#pragma once

// Run-log format v1:
//
//   format: 1
//   suite: mini
//   algorithm: random-search
//   function: sphere
//   dimension: 5
//   instance: 3
//   reference: -42.25
//
//   1 130.5
//   4 97.25
//   total: 1000
//
// '#' starts a comment anywhere on a line. Data lines hold raw indicator
// values; the loader keeps only strict improvements.

#include <filesystem>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "runfall/model.hpp"

namespace runfall {

inline constexpr int kRunLogFormatVersion = 1;
inline constexpr std::string_view kRunLogExtension = ".rlog";

struct LogHeader {
  int format_version = kRunLogFormatVersion;
  std::string suite;
  std::string algorithm;
  std::string function_id;
  std::uint32_t dimension = 1;
  std::uint64_t instance_id = 0;
  double reference_value = 0.0;
};

/// Throws ParseError carrying the offending line number.
RunTrace parse_run_log(std::string_view text);

/// Serializes a trace; `comments` become leading '#' lines. Names containing
/// '#' or line breaks are rejected with InvalidArgument.
std::string write_run_log(const RunTrace& trace, std::span<const std::string> comments = {});

struct LoadOptions {
  /// Colliding (algorithm, function, dimension, instance) keys are renumbered
  /// as repetitions instead of rejected.
  bool allow_repetitions = false;
};

/// Loads files and directories (recursively, *.rlog only inside directories).
/// Files are read in sorted path order so the result is independent of the
/// order of `paths`. Parse failures of all files are reported together in one
/// DataError.
DataSet load_dataset(std::span<const std::filesystem::path> paths, const LoadOptions& options = {});

/// Files load_dataset would read, sorted and de-duplicated.
std::vector<std::filesystem::path> collect_run_logs(std::span<const std::filesystem::path> paths);

/// Runtime table text:
///
///   # runtime-table v1
///   function,dimension,precision,successes,failures
///   sphere,5,100,1 3 2,
///
/// Lists are space separated; either list may be empty.
std::string write_runtime_table(const RuntimeTable& table);
RuntimeTable parse_runtime_table(std::string_view text);

std::string read_text_file(const std::filesystem::path& path);
void write_text_file(const std::filesystem::path& path, std::string_view text);

}  // namespace runfall
