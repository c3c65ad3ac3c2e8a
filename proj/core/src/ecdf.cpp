#include "runfall/ecdf.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <set>
#include <thread>

#include "runfall/error.hpp"
#include "runfall/numfmt.hpp"
#include "runfall/rng.hpp"
#include "runfall/runtime.hpp"

namespace runfall {

EcdfCurve::EcdfCurve(std::vector<double> finite_runtimes, std::size_t total_count,
                     std::optional<double> cross_x, double solved_fraction)
    : runtimes_(std::move(finite_runtimes)),
      total_count_(total_count),
      cross_x_(cross_x),
      solved_fraction_(solved_fraction) {
  if (total_count_ == 0) throw InvalidArgument("ECDF over zero samples");
  if (runtimes_.size() > total_count_) throw InvalidArgument("more finite runtimes than samples");
  if (!std::all_of(runtimes_.begin(), runtimes_.end(), [](double x) { return std::isfinite(x); })) {
    throw InvalidArgument("ECDF runtimes must be finite; pass missing values through total_count");
  }
  if (!(solved_fraction_ >= 0.0 && solved_fraction_ <= 1.0)) {
    throw InvalidArgument("solved fraction outside [0, 1]");
  }
  if (cross_x_ && !std::isfinite(*cross_x_)) throw InvalidArgument("cross marker must be finite");
  std::sort(runtimes_.begin(), runtimes_.end());
}

double EcdfCurve::operator()(double x) const {
  const auto count = std::upper_bound(runtimes_.begin(), runtimes_.end(), x) - runtimes_.begin();
  return static_cast<double>(count) / static_cast<double>(total_count_);
}

double EcdfCurve::right_limit() const {
  return static_cast<double>(runtimes_.size()) / static_cast<double>(total_count_);
}

std::vector<EcdfPoint> EcdfCurve::steps() const {
  std::vector<EcdfPoint> out;
  for (std::size_t i = 0; i < runtimes_.size(); ++i) {
    if (i + 1 < runtimes_.size() && runtimes_[i + 1] == runtimes_[i]) continue;
    out.push_back({runtimes_[i], static_cast<double>(i + 1) / static_cast<double>(total_count_)});
  }
  return out;
}

EcdfCurve build_ecdf(std::span<const std::optional<double>> samples) {
  if (samples.empty()) throw InvalidArgument("build_ecdf: empty sample list");
  std::vector<double> finite;
  for (const auto& s : samples) {
    if (s) finite.push_back(*s);
  }
  const double solved = static_cast<double>(finite.size()) / static_cast<double>(samples.size());
  return EcdfCurve(std::move(finite), samples.size(), std::nullopt, solved);
}

std::uint32_t AggregationScope::dimension() const {
  if (dimensions.size() > 1) {
    std::string list;
    for (auto d : dimensions) list += (list.empty() ? "" : ", ") + std::to_string(d);
    throw ScopeError("refusing to aggregate over several dimensions (" + list +
                     "); request one dimension per ECDF");
  }
  if (dimensions.empty()) throw ScopeError("aggregation scope needs a dimension");
  if (dimensions.front() < 1) throw ScopeError("dimension must be >= 1");
  return dimensions.front();
}

namespace {

std::vector<std::string> normalized(std::vector<std::string> names) {
  std::sort(names.begin(), names.end());
  names.erase(std::unique(names.begin(), names.end()), names.end());
  return names;
}

std::vector<std::string> scoped_functions(const DataSet& dataset, const AggregationScope& scope,
                                          std::uint32_t dim) {
  if (!scope.functions.empty()) return normalized(scope.functions);
  std::vector<std::string> out;
  for (const auto& f : dataset.functions(scope.algorithm)) {
    if (!dataset.group(scope.algorithm, f, dim).empty()) out.push_back(f);
  }
  return out;
}

std::string pair_stream_key(const RuntimeKey& key) {
  return key.function_id + "/" + std::to_string(key.dimension) + "/" + format_double(key.precision);
}

}  // namespace

RuntimeTable scope_table(const DataSet& dataset, const AggregationScope& scope,
                         const TargetSet& targets) {
  const std::uint32_t dim = scope.dimension();
  RuntimeTable out;
  for (const auto& f : scoped_functions(dataset, scope, dim)) {
    for (auto& [key, entry] : extract_runtimes(dataset, scope.algorithm, f, dim, targets)) {
      out.insert(key, entry);
    }
  }
  if (out.empty()) {
    throw DataError("no trials for algorithm " + scope.algorithm + " in dimension " + std::to_string(dim));
  }
  return out;
}

RuntimeTable scope_table(const RuntimeTable& table, const AggregationScope& scope,
                         const TargetSet& targets) {
  const std::uint32_t dim = scope.dimension();
  std::vector<std::string> functions = scope.functions;
  if (functions.empty()) {
    for (const auto& [key, _] : table) {
      if (key.dimension == dim) functions.push_back(key.function_id);
    }
  }
  RuntimeTable out;
  for (const auto& f : normalized(std::move(functions))) {
    for (double p : targets.precisions()) {
      RuntimeKey key{f, dim, p};
      const RuntimeEntry* e = table.find(key);
      if (!e) {
        throw DataError("runtime table has no entry for " + f + " dim " + std::to_string(dim) +
                        " precision " + format_double(p));
      }
      out.insert(std::move(key), *e);
    }
  }
  if (out.empty()) throw DataError("runtime table has nothing in dimension " + std::to_string(dim));
  return out;
}

EcdfCurve aggregate_ecdf(const RuntimeTable& table, const AggregationScope& scope,
                         const TargetSet& targets, const EcdfOptions& options) {
  if (options.bootstraps < 1) throw InvalidArgument("need at least one bootstrap sample");
  const RuntimeTable scoped = scope_table(table, scope, targets);
  const double scale =
      options.x_unit == XUnit::evals_per_dimension ? 1.0 / static_cast<double>(scope.dimension()) : 1.0;

  std::vector<std::pair<const RuntimeKey*, const RuntimeEntry*>> pairs;
  for (const auto& [key, entry] : scoped) pairs.emplace_back(&key, &entry);

  std::vector<std::vector<double>> samples(pairs.size());
  std::atomic<std::size_t> next{0};
  const auto work = [&] {
    for (std::size_t i = next++; i < pairs.size(); i = next++) {
      const auto& [key, entry] = pairs[i];
      if (!entry->solved()) continue;
      Rng rng(derive_seed(options.seed, pair_stream_key(*key)));
      const auto runtimes = bootstrap_runtimes(*entry, options.bootstraps, options.variance_reduction, rng);
      samples[i].reserve(runtimes.size());
      for (Evals r : runtimes) samples[i].push_back(static_cast<double>(r) * scale);
    }
  };
  const unsigned threads = std::max(1u, std::min<unsigned>(options.threads, static_cast<unsigned>(pairs.size())));
  if (threads == 1) {
    work();
  } else {
    std::vector<std::jthread> pool;
    for (unsigned t = 0; t < threads; ++t) pool.emplace_back(work);
  }

  std::vector<double> finite;
  for (auto& s : samples) finite.insert(finite.end(), s.begin(), s.end());
  std::optional<double> cross = cross_marker(scoped);
  if (cross) *cross *= scale;
  return EcdfCurve(std::move(finite), pairs.size() * options.bootstraps, cross,
                   solved_fraction_dot(scoped));
}

EcdfCurve aggregate_ecdf(const DataSet& dataset, const AggregationScope& scope,
                         const TargetSet& targets, const EcdfOptions& options) {
  return aggregate_ecdf(scope_table(dataset, scope, targets), scope, targets, options);
}

std::optional<double> cross_marker(const RuntimeTable& scoped) {
  std::vector<double> maxima;
  for (const auto& [_, entry] : scoped) {
    if (entry.failures.empty()) continue;
    maxima.push_back(static_cast<double>(*std::max_element(entry.failures.begin(), entry.failures.end())));
  }
  if (maxima.empty()) return std::nullopt;
  std::sort(maxima.begin(), maxima.end());
  const std::size_t mid = maxima.size() / 2;
  if (maxima.size() % 2 == 1) return maxima[mid];
  return (maxima[mid - 1] + maxima[mid]) / 2.0;
}

std::optional<double> cross_marker(const DataSet& dataset, const AggregationScope& scope,
                                   const TargetSet& targets) {
  return cross_marker(scope_table(dataset, scope, targets));
}

double solved_fraction_dot(const RuntimeTable& scoped) {
  if (scoped.empty()) throw DataError("solved fraction of an empty scope");
  const auto solved = std::count_if(scoped.begin(), scoped.end(),
                                    [](const auto& kv) { return kv.second.solved(); });
  return static_cast<double>(solved) / static_cast<double>(scoped.size());
}

double solved_fraction_dot(const DataSet& dataset, const AggregationScope& scope,
                           const TargetSet& targets) {
  return solved_fraction_dot(scope_table(dataset, scope, targets));
}

double geometric_mean_runtime(std::span<const double> samples) {
  if (samples.empty()) throw InvalidArgument("geometric mean of no runtimes");
  double sum = 0.0;
  for (double x : samples) {
    if (!std::isfinite(x) || x < 1.0) throw InvalidArgument("geometric mean needs finite runtimes >= 1");
    sum += std::log(x);
  }
  return std::exp(sum / static_cast<double>(samples.size()));
}

double geometric_mean_runtime(std::span<const std::optional<double>> samples) {
  std::vector<double> values;
  values.reserve(samples.size());
  for (const auto& s : samples) {
    if (!s) throw InvalidArgument("geometric mean is undefined with missing runtimes");
    values.push_back(*s);
  }
  return geometric_mean_runtime(std::span<const double>(values));
}

}  // namespace runfall
