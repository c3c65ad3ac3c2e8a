#include "runfall/runtime.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>

#include "runfall/error.hpp"

namespace runfall {

std::optional<Evals> hitting_time(const RunTrace& trace, double target) {
  const auto steps = trace.steps();
  const auto it = std::partition_point(steps.begin(), steps.end(),
                                       [target](const Step& s) { return s.value > target; });
  if (it == steps.end()) return std::nullopt;
  return it->evals;
}

RuntimeTable extract_runtimes(std::span<const RunTrace* const> traces, const TargetSet& targets) {
  if (traces.empty()) throw DataError("extract_runtimes: no trials in group");
  const ProblemTriple& first = traces.front()->triple();
  for (const RunTrace* t : traces) {
    if (t->triple().function_id != first.function_id || t->triple().dimension != first.dimension) {
      throw DataError("extract_runtimes: trials mix functions or dimensions");
    }
  }

  RuntimeTable table;
  for (double precision : targets.precisions()) {
    RuntimeEntry entry;
    for (const RunTrace* t : traces) {
      const double target = absolute_target(t->reference_value(), precision);
      if (auto hit = hitting_time(*t, target)) {
        entry.successes.push_back(*hit);
      } else {
        entry.failures.push_back(t->total_evaluations());
      }
    }
    table.insert(RuntimeKey{first.function_id, first.dimension, precision}, std::move(entry));
  }
  return table;
}

RuntimeTable extract_runtimes(const DataSet& dataset, const std::string& algorithm,
                              const std::string& function_id, std::uint32_t dimension,
                              const TargetSet& targets) {
  const auto group = dataset.group(algorithm, function_id, dimension);
  if (group.empty()) {
    throw DataError("no trials for algorithm " + algorithm + ", function " + function_id +
                    ", dimension " + std::to_string(dimension));
  }
  return extract_runtimes(std::span<const RunTrace* const>(group), targets);
}

RuntimeTable extract_all_runtimes(const DataSet& dataset, const std::string& algorithm,
                                  const TargetSet& targets) {
  RuntimeTable out;
  for (const auto& function_id : dataset.functions(algorithm)) {
    for (std::uint32_t dim : dataset.dimensions(algorithm)) {
      const auto group = dataset.group(algorithm, function_id, dim);
      if (group.empty()) continue;
      for (auto& [key, entry] : extract_runtimes(std::span<const RunTrace* const>(group), targets)) {
        out.insert(key, entry);
      }
    }
  }
  return out;
}

double art(const RuntimeEntry& entry) {
  if (entry.successes.empty()) return std::numeric_limits<double>::infinity();
  const Evals total = std::accumulate(entry.successes.begin(), entry.successes.end(), Evals{0}) +
                      std::accumulate(entry.failures.begin(), entry.failures.end(), Evals{0});
  return static_cast<double>(total) / static_cast<double>(entry.successes.size());
}

double art_ps_form(double mean_success, double mean_failure, double p_s) {
  if (!(p_s > 0.0) || !(p_s <= 1.0)) throw InvalidArgument("art_ps_form: p_s must be in (0, 1]");
  if (p_s == 1.0) return mean_success;
  return mean_success + (1.0 - p_s) / p_s * mean_failure;
}

namespace {

void require_success(const RuntimeEntry& entry) {
  if (entry.successes.empty()) {
    throw UndefinedRuntime("simulated restarts need at least one successful trial");
  }
}

// Adds draws until a success; `runtime` and `restarts` carry the prefix.
RestartSample continue_restart(const RuntimeEntry& entry, Rng& rng, RestartSample sample) {
  const std::uint64_t s = entry.successes.size();
  const std::uint64_t k = entry.instance_count();
  while (true) {
    const std::uint64_t i = rng.uniform_index(k);
    if (i < s) {
      sample.runtime += entry.successes[i];
      return sample;
    }
    sample.runtime += entry.failures[i - s];
    ++sample.restarts;
  }
}

}  // namespace

RestartSample simulate_restart(const RuntimeEntry& entry, Rng& rng) {
  require_success(entry);
  return continue_restart(entry, rng, RestartSample{});
}

std::vector<Evals> bootstrap_runtimes(const RuntimeEntry& entry, std::size_t samples,
                                      bool variance_reduction, Rng& rng) {
  require_success(entry);
  if (samples < 1) throw InvalidArgument("bootstrap_runtimes: need at least one sample");

  std::vector<Evals> out;
  out.reserve(samples);
  if (!variance_reduction) {
    for (std::size_t k = 0; k < samples; ++k) out.push_back(simulate_restart(entry, rng).runtime);
    return out;
  }

  const std::size_t s = entry.successes.size();
  std::vector<std::size_t> order(entry.instance_count());
  std::iota(order.begin(), order.end(), std::size_t{0});
  rng.shuffle(std::span<std::size_t>(order));

  for (std::size_t k = 0; k < samples; ++k) {
    const std::size_t first = order[k % order.size()];
    if (first < s) {
      out.push_back(entry.successes[first]);
    } else {
      out.push_back(continue_restart(entry, rng, RestartSample{entry.failures[first - s], 1}).runtime);
    }
  }
  return out;
}

std::vector<ScalingPoint> scaling_series(const DataSet& dataset, const std::string& algorithm,
                                         const std::string& function_id,
                                         std::span<const std::uint32_t> dimensions,
                                         double precision) {
  std::vector<std::uint32_t> dims(dimensions.begin(), dimensions.end());
  std::sort(dims.begin(), dims.end());
  dims.erase(std::unique(dims.begin(), dims.end()), dims.end());

  const TargetSet single({precision});
  std::vector<ScalingPoint> out;
  for (std::uint32_t n : dims) {
    const RuntimeTable table = extract_runtimes(dataset, algorithm, function_id, n, single);
    const double a = art(table.begin()->second);
    ScalingPoint point{n, std::nullopt};
    if (std::isfinite(a)) point.art_per_dimension = a / static_cast<double>(n);
    out.push_back(point);
  }
  return out;
}

}  // namespace runfall
