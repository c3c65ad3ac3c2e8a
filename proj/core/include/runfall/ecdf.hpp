#pragma once

// Empirical runtime distributions (data profiles).

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "runfall/model.hpp"

namespace runfall {

struct EcdfPoint {
  double x = 0.0;
  double fraction = 0.0;

  friend bool operator==(const EcdfPoint&, const EcdfPoint&) = default;
};

/// F(x) = #{finite runtimes <= x} / total_count. Missing runtimes are part of
/// total_count, so the right limit is the finite fraction.
class EcdfCurve {
 public:
  /// Sorts `finite_runtimes`. Throws InvalidArgument when there are more finite
  /// runtimes than total_count, total_count is zero, a runtime is not finite,
  /// or solved_fraction is outside [0, 1].
  EcdfCurve(std::vector<double> finite_runtimes, std::size_t total_count,
            std::optional<double> cross_x, double solved_fraction);

  std::span<const double> runtimes() const noexcept { return runtimes_; }
  std::size_t total_count() const noexcept { return total_count_; }
  std::size_t missing_count() const noexcept { return total_count_ - runtimes_.size(); }
  std::optional<double> cross_x() const noexcept { return cross_x_; }
  double solved_fraction() const noexcept { return solved_fraction_; }

  /// Right-continuous: a runtime equal to x counts.
  double operator()(double x) const;
  double right_limit() const;

  /// One point per distinct runtime with F at that runtime.
  std::vector<EcdfPoint> steps() const;

  friend bool operator==(const EcdfCurve&, const EcdfCurve&) = default;

 private:
  std::vector<double> runtimes_;
  std::size_t total_count_;
  std::optional<double> cross_x_;
  double solved_fraction_;
};

/// Curve of raw samples; solved_fraction is the finite fraction and there is
/// no cross. Throws InvalidArgument on an empty sample list.
EcdfCurve build_ecdf(std::span<const std::optional<double>> samples);

enum class XUnit { evals, evals_per_dimension };

/// What one ECDF aggregates. Exactly one dimension must be requested: asking
/// for several is refused with ScopeError rather than merged.
struct AggregationScope {
  std::string algorithm;
  std::vector<std::uint32_t> dimensions;
  /// Empty means every function present for the algorithm and dimension.
  std::vector<std::string> functions;

  /// The single dimension; throws ScopeError otherwise.
  std::uint32_t dimension() const;
};

struct EcdfOptions {
  std::size_t bootstraps = 1000;
  std::uint64_t seed = 0;
  bool variance_reduction = true;
  XUnit x_unit = XUnit::evals;
  /// Worker threads for the bootstrap; the result never depends on it.
  unsigned threads = 1;
};

/// Runtime table restricted to the scope: one (function, dimension) group per
/// scoped function, one entry per target precision.
RuntimeTable scope_table(const DataSet& dataset, const AggregationScope& scope,
                         const TargetSet& targets);

/// Same restriction applied to an existing table (for example a composed
/// reference). scope.algorithm is not used. Throws DataError when a scoped
/// (function, precision) is absent.
RuntimeTable scope_table(const RuntimeTable& table, const AggregationScope& scope,
                         const TargetSet& targets);

/// Every (function, precision) pair in scope contributes `bootstraps`
/// simulated restart runtimes, or as many missing values when unsolved. The
/// stream of each pair is seeded from (seed, function, dimension, precision).
EcdfCurve aggregate_ecdf(const DataSet& dataset, const AggregationScope& scope,
                         const TargetSet& targets, const EcdfOptions& options);
EcdfCurve aggregate_ecdf(const RuntimeTable& table, const AggregationScope& scope,
                         const TargetSet& targets, const EcdfOptions& options);

/// Median, over pairs with at least one failure, of the longest failure;
/// nullopt when no pair has a failure. In evaluations.
std::optional<double> cross_marker(const RuntimeTable& scoped);
std::optional<double> cross_marker(const DataSet& dataset, const AggregationScope& scope,
                                   const TargetSet& targets);

/// Fraction of (function, precision) pairs with at least one success.
double solved_fraction_dot(const RuntimeTable& scoped);
double solved_fraction_dot(const DataSet& dataset, const AggregationScope& scope,
                           const TargetSet& targets);

/// exp(mean(log x)). Throws InvalidArgument on an empty list, a missing value
/// or a value below 1.
double geometric_mean_runtime(std::span<const std::optional<double>> samples);
double geometric_mean_runtime(std::span<const double> samples);

}  // namespace runfall
