#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "runfall/ecdf.hpp"

namespace runfall::cli {

using Metadata = std::vector<std::pair<std::string, std::string>>;

/// ECDF step points as CSV:
///
///   # key=value            (caller metadata, then total_count, cross_x,
///   ...                     solved_fraction)
///   x,fraction
///   12,0.0196
///
/// The curve can be rebuilt exactly from this text with read_ecdf_csv.
std::string write_ecdf_csv(const EcdfCurve& curve, const Metadata& metadata);

struct EcdfCsv {
  EcdfCurve curve;
  Metadata metadata;

  std::optional<std::string> get(std::string_view key) const;
};

/// Throws runfall::ParseError on malformed text.
EcdfCsv read_ecdf_csv(std::string_view text);

}  // namespace runfall::cli
