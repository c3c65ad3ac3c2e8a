#pragma once

// First-hitting runtimes, average runtime and simulated restarts.

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "runfall/model.hpp"
#include "runfall/rng.hpp"

namespace runfall {

inline constexpr std::size_t kDefaultBootstraps = 1000;

/// Smallest evals whose best-so-far value is <= target; nullopt if never.
std::optional<Evals> hitting_time(const RunTrace& trace, double target);

/// Runtime table of one (algorithm, function, dimension) group. Each trace
/// contributes its hitting time where it reached I_ref + precision, and its
/// total evaluations where it did not. Throws DataError on an empty group.
RuntimeTable extract_runtimes(const DataSet& dataset, const std::string& algorithm,
                              const std::string& function_id, std::uint32_t dimension,
                              const TargetSet& targets);

/// Same for an explicit list of traces, which must share function and
/// dimension.
RuntimeTable extract_runtimes(std::span<const RunTrace* const> traces, const TargetSet& targets);

/// Tables for every (function, dimension) of one algorithm.
RuntimeTable extract_all_runtimes(const DataSet& dataset, const std::string& algorithm,
                                  const TargetSet& targets);

/// (sum of successes + sum of failures) / number of successes; +inf without
/// successes.
double art(const RuntimeEntry& entry);

/// E(RT_s) + (1 - p_s) / p_s * E(RT_us). With p_s == 1 the second term is zero
/// whatever mean_failure holds (NaN included). Throws InvalidArgument unless
/// 0 < p_s <= 1.
double art_ps_form(double mean_success, double mean_failure, double p_s);

/// One draw of the restart algorithm.
struct RestartSample {
  Evals runtime = 0;
  /// Unsuccessful trials drawn before the success (J).
  std::uint64_t restarts = 0;
};

/// Draws trials uniformly with replacement among the K trials, successes
/// first then failures, until a success; sums the failures' lengths and the
/// success's runtime. Throws UndefinedRuntime when the entry has no success.
RestartSample simulate_restart(const RuntimeEntry& entry, Rng& rng);

/// N simulated restarts. With variance reduction the trials are first put in a
/// seeded random order and sample k (0-based) starts from trial k mod K
/// instead of a random one; a failed start continues with random draws. With
/// N == K and all trials successful each trial appears exactly once.
/// Without variance reduction, the first sample equals simulate_restart on
/// an Rng in the same state.
std::vector<Evals> bootstrap_runtimes(const RuntimeEntry& entry, std::size_t samples,
                                      bool variance_reduction, Rng& rng);

/// aRT / n for one dimension; nullopt when aRT is infinite.
struct ScalingPoint {
  std::uint32_t dimension = 1;
  std::optional<double> art_per_dimension;

  friend bool operator==(const ScalingPoint&, const ScalingPoint&) = default;
};

/// One point per distinct dimension, ascending. Throws DataError when a
/// dimension has no trials.
std::vector<ScalingPoint> scaling_series(const DataSet& dataset, const std::string& algorithm,
                                         const std::string& function_id,
                                         std::span<const std::uint32_t> dimensions,
                                         double precision);

}  // namespace runfall
