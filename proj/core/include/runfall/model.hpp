#pragma once

// Domain types shared by every module.

#include <cstdint>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <tuple>
#include <vector>

namespace runfall {

/// Number of objective function evaluations.
using Evals = std::uint64_t;

/// Dimension n, parametrized function family and instance id.
struct ProblemTriple {
  std::string function_id;
  std::uint32_t dimension = 1;
  std::uint64_t instance_id = 0;

  friend bool operator==(const ProblemTriple&, const ProblemTriple&) = default;
};

enum class IndicatorKind { best_so_far, noisy_percentile };

/// A triple completed with a quality indicator and a target precision.
class ProblemQuintuple {
 public:
  ProblemQuintuple(ProblemTriple triple, IndicatorKind indicator, double target_precision);

  const ProblemTriple& triple() const noexcept { return triple_; }
  IndicatorKind indicator() const noexcept { return indicator_; }
  double target_precision() const noexcept { return target_precision_; }

 private:
  ProblemTriple triple_;
  IndicatorKind indicator_;
  double target_precision_;
};

/// One point of a convergence graph: indicator value reached after `evals`.
struct Step {
  Evals evals = 0;
  double value = 0.0;

  friend bool operator==(const Step&, const Step&) = default;
};

/// One trial: best-so-far improvement points plus the identity of the run.
///
/// Construction validates: dimension >= 1, at least one step, evals strictly
/// increasing and >= 1, values non-increasing and not NaN, and
/// total_evaluations >= the last step's evals.
class RunTrace {
 public:
  RunTrace(std::string suite, std::string algorithm, ProblemTriple triple,
           double reference_value, std::vector<Step> steps, Evals total_evaluations);

  const std::string& suite() const noexcept { return suite_; }
  const std::string& algorithm() const noexcept { return algorithm_; }
  const ProblemTriple& triple() const noexcept { return triple_; }
  double reference_value() const noexcept { return reference_value_; }
  std::span<const Step> steps() const noexcept { return steps_; }
  Evals total_evaluations() const noexcept { return total_evaluations_; }

  /// Set when the loader assigned a synthetic instance id to a repeated trial.
  bool is_repetition() const noexcept { return repetition_; }

  /// Copy of this trace under another instance id, flagged as a repetition.
  RunTrace as_repetition(std::uint64_t instance_id) const;

  /// Copy of this trace attributed to another algorithm name.
  RunTrace relabeled(std::string algorithm) const;

  friend bool operator==(const RunTrace&, const RunTrace&) = default;

 private:
  std::string suite_;
  std::string algorithm_;
  ProblemTriple triple_;
  double reference_value_;
  std::vector<Step> steps_;
  Evals total_evaluations_;
  bool repetition_ = false;
};

enum class TargetOrigin { fixed, runlength_based };

/// Target precisions, strictly decreasing (easiest first). The last entry is
/// the final target.
class TargetSet {
 public:
  TargetSet(std::vector<double> precisions, TargetOrigin origin = TargetOrigin::fixed);

  std::span<const double> precisions() const noexcept { return precisions_; }
  std::size_t size() const noexcept { return precisions_.size(); }
  double final_precision() const noexcept { return precisions_.back(); }
  TargetOrigin origin() const noexcept { return origin_; }

  /// Absolute targets for one instance, strictly decreasing like the precisions.
  std::vector<double> absolute(double reference_value) const;

  friend bool operator==(const TargetSet&, const TargetSet&) = default;

 private:
  std::vector<double> precisions_;
  TargetOrigin origin_;
};

/// I_target = I_ref + precision. Throws InvalidArgument on non-finite input or
/// a non-positive precision.
double absolute_target(double reference_value, double precision);

/// (function, dimension, precision). Ordered by function, then dimension, then
/// precision descending so iteration runs from the easiest target.
struct RuntimeKey {
  std::string function_id;
  std::uint32_t dimension = 1;
  double precision = 0.0;

  friend bool operator==(const RuntimeKey&, const RuntimeKey&) = default;
  friend bool operator<(const RuntimeKey& a, const RuntimeKey& b) {
    return std::tie(a.function_id, a.dimension, b.precision) <
           std::tie(b.function_id, b.dimension, a.precision);
  }
};

/// Runtimes of the K trials for one key: first-hitting times of the
/// successful trials and the full lengths of the unsuccessful ones.
struct RuntimeEntry {
  std::vector<Evals> successes;
  std::vector<Evals> failures;

  std::size_t instance_count() const noexcept { return successes.size() + failures.size(); }
  bool solved() const noexcept { return !successes.empty(); }

  friend bool operator==(const RuntimeEntry&, const RuntimeEntry&) = default;
};

/// RuntimeEntry per key. Every entry has K >= 1 and all values >= 1.
class RuntimeTable {
 public:
  using Map = std::map<RuntimeKey, RuntimeEntry>;

  RuntimeTable() = default;

  /// Throws DataError when the key exists or the entry breaks the invariants.
  void insert(RuntimeKey key, RuntimeEntry entry);

  const RuntimeEntry& at(const RuntimeKey& key) const;
  const RuntimeEntry* find(const RuntimeKey& key) const;
  bool empty() const noexcept { return entries_.empty(); }
  std::size_t size() const noexcept { return entries_.size(); }

  Map::const_iterator begin() const noexcept { return entries_.begin(); }
  Map::const_iterator end() const noexcept { return entries_.end(); }

  /// Every key, in table order.
  std::vector<RuntimeKey> keys() const;

  /// Entries restricted to one (function, dimension), easiest precision first.
  std::vector<std::pair<double, const RuntimeEntry*>> slice(const std::string& function_id,
                                                            std::uint32_t dimension) const;

  friend bool operator==(const RuntimeTable&, const RuntimeTable&) = default;

 private:
  Map entries_;
};

/// Index of a trace inside a DataSet.
struct TraceKey {
  std::string algorithm;
  std::string function_id;
  std::uint32_t dimension = 1;
  std::uint64_t instance_id = 0;

  friend auto operator<=>(const TraceKey&, const TraceKey&) = default;
};

TraceKey key_of(const RunTrace& trace);

/// Run traces indexed by (algorithm, function, dimension, instance); at most
/// one trace per key.
class DataSet {
 public:
  DataSet() = default;

  /// Throws DataError naming both origins when the key is already present.
  void insert(RunTrace trace, std::string origin = {});

  std::size_t size() const noexcept { return traces_.size(); }
  bool empty() const noexcept { return traces_.empty(); }
  bool contains(const TraceKey& key) const { return traces_.contains(key); }
  const RunTrace& at(const TraceKey& key) const;
  const std::string& origin(const TraceKey& key) const;

  /// All traces of one (algorithm, function, dimension), by instance id.
  std::vector<const RunTrace*> group(const std::string& algorithm, const std::string& function_id,
                                     std::uint32_t dimension) const;

  std::vector<std::string> algorithms() const;
  std::vector<std::string> functions(const std::string& algorithm) const;
  std::vector<std::uint32_t> dimensions(const std::string& algorithm) const;

  /// Largest instance id present for (algorithm, function, dimension), if any.
  std::optional<std::uint64_t> max_instance(const std::string& algorithm,
                                            const std::string& function_id,
                                            std::uint32_t dimension) const;

  /// Every trace in key order.
  std::vector<const RunTrace*> traces() const;

 private:
  struct Stored {
    RunTrace trace;
    std::string origin;
  };
  std::map<TraceKey, Stored> traces_;
};

}  // namespace runfall
