#pragma once

#include <cstdint>
#include <random>
#include <span>
#include <string_view>
#include <utility>

namespace runfall {

/// Seedable deterministic generator. The engine is std::mt19937_64, whose
/// output sequence is fixed by the standard; the bounded-integer and unit-real
/// transforms are implemented here rather than with std:: distributions, which
/// differ between standard libraries. Same seed, same stream, on every build.
class Rng {
 public:
  /// Recorded in every emitted artifact.
  static constexpr std::string_view kIdentifier = "mt19937_64/lemire-bounded/53bit-unit";

  explicit Rng(std::uint64_t seed) : engine_(seed) {}

  std::uint64_t next() { return engine_(); }

  /// Uniform integer in [0, bound). bound must be > 0.
  std::uint64_t uniform_index(std::uint64_t bound);

  /// Uniform real in [0, 1) with 53 random bits.
  double uniform01() { return static_cast<double>(engine_() >> 11) * 0x1.0p-53; }

  /// Uniform real in [lo, hi).
  double uniform(double lo, double hi) { return lo + (hi - lo) * uniform01(); }

  /// Fisher-Yates shuffle driven by uniform_index.
  template <typename T>
  void shuffle(std::span<T> values) {
    for (std::size_t i = values.size(); i > 1; --i) {
      const auto j = static_cast<std::size_t>(uniform_index(i));
      std::swap(values[i - 1], values[j]);
    }
  }

 private:
  std::mt19937_64 engine_;
};

/// Sub-seed for an independent stream keyed by `key`. Mixes FNV-1a of the key
/// into the master seed with splitmix64 finalization, so streams depend only on
/// (master, key) and never on scheduling.
std::uint64_t derive_seed(std::uint64_t master, std::string_view key);

}  // namespace runfall
