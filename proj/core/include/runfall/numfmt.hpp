#pragma once

// Locale-independent number text conversion used by every file format.

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>

namespace runfall {

/// Shortest decimal text that parses back to exactly `value`. Infinities are
/// written as "inf" / "-inf".
std::string format_double(double value);

/// Fixed-point text with `decimals` digits after the point (SVG coordinates).
std::string format_fixed(double value, int decimals);

/// Parses a whole decimal or scientific literal, "inf" and "-inf" included.
/// Returns nullopt on trailing garbage or an empty string.
std::optional<double> parse_double(std::string_view text);

/// Parses a whole unsigned decimal integer.
std::optional<std::uint64_t> parse_uint(std::string_view text);

/// Strips ASCII whitespace at both ends.
std::string_view trim(std::string_view text);

}  // namespace runfall
