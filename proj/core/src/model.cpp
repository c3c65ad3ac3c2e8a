#include "runfall/model.hpp"

#include <algorithm>
#include <cmath>
#include <set>
#include <utility>

#include "runfall/error.hpp"

namespace runfall {

ProblemQuintuple::ProblemQuintuple(ProblemTriple triple, IndicatorKind indicator,
                                   double target_precision)
    : triple_(std::move(triple)), indicator_(indicator), target_precision_(target_precision) {
  if (triple_.dimension < 1) throw InvalidArgument("dimension must be >= 1");
  if (!(target_precision_ > 0.0) || !std::isfinite(target_precision_)) {
    throw InvalidArgument("target precision must be finite and > 0");
  }
}

RunTrace::RunTrace(std::string suite, std::string algorithm, ProblemTriple triple,
                   double reference_value, std::vector<Step> steps, Evals total_evaluations)
    : suite_(std::move(suite)),
      algorithm_(std::move(algorithm)),
      triple_(std::move(triple)),
      reference_value_(reference_value),
      steps_(std::move(steps)),
      total_evaluations_(total_evaluations) {
  if (triple_.dimension < 1) throw InvalidArgument("dimension must be >= 1");
  if (!std::isfinite(reference_value_)) throw InvalidArgument("reference value must be finite");
  if (steps_.empty()) throw InvalidArgument("a trial has at least one evaluation");
  for (std::size_t i = 0; i < steps_.size(); ++i) {
    const Step& s = steps_[i];
    if (s.evals < 1) throw InvalidArgument("evaluation counts start at 1");
    if (std::isnan(s.value)) throw InvalidArgument("indicator value is NaN");
    if (i > 0) {
      if (s.evals <= steps_[i - 1].evals) {
        throw InvalidArgument("evaluation counts must be strictly increasing");
      }
      if (s.value > steps_[i - 1].value) {
        throw InvalidArgument("best-so-far values must be non-increasing");
      }
    }
  }
  if (total_evaluations_ < steps_.back().evals) {
    throw InvalidArgument("total evaluations below the last recorded evaluation");
  }
}

RunTrace RunTrace::as_repetition(std::uint64_t instance_id) const {
  RunTrace copy = *this;
  copy.triple_.instance_id = instance_id;
  copy.repetition_ = true;
  return copy;
}

RunTrace RunTrace::relabeled(std::string algorithm) const {
  RunTrace copy = *this;
  copy.algorithm_ = std::move(algorithm);
  return copy;
}

TargetSet::TargetSet(std::vector<double> precisions, TargetOrigin origin)
    : precisions_(std::move(precisions)), origin_(origin) {
  if (precisions_.empty()) throw InvalidArgument("target set is empty");
  for (std::size_t i = 0; i < precisions_.size(); ++i) {
    if (!(precisions_[i] > 0.0) || !std::isfinite(precisions_[i])) {
      throw InvalidArgument("target precisions must be finite and > 0");
    }
    if (i > 0 && !(precisions_[i] < precisions_[i - 1])) {
      throw InvalidArgument("target precisions must be strictly decreasing");
    }
  }
}

std::vector<double> TargetSet::absolute(double reference_value) const {
  std::vector<double> out;
  out.reserve(precisions_.size());
  for (double p : precisions_) out.push_back(absolute_target(reference_value, p));
  return out;
}

double absolute_target(double reference_value, double precision) {
  if (!std::isfinite(reference_value) || !std::isfinite(precision)) {
    throw InvalidArgument("absolute_target: non-finite input");
  }
  if (!(precision > 0.0)) throw InvalidArgument("absolute_target: precision must be > 0");
  return reference_value + precision;
}

void RuntimeTable::insert(RuntimeKey key, RuntimeEntry entry) {
  if (key.dimension < 1) throw DataError("runtime table: dimension must be >= 1");
  if (!(key.precision > 0.0) || !std::isfinite(key.precision)) {
    throw DataError("runtime table: precision must be finite and > 0");
  }
  if (entry.instance_count() == 0) throw DataError("runtime table: entry without trials");
  const auto positive = [](Evals e) { return e >= 1; };
  if (!std::all_of(entry.successes.begin(), entry.successes.end(), positive) ||
      !std::all_of(entry.failures.begin(), entry.failures.end(), positive)) {
    throw DataError("runtime table: runtimes must be >= 1");
  }
  auto [it, inserted] = entries_.try_emplace(std::move(key), std::move(entry));
  if (!inserted) {
    throw DataError("runtime table: duplicate key " + it->first.function_id + " dim " +
                    std::to_string(it->first.dimension));
  }
}

const RuntimeEntry& RuntimeTable::at(const RuntimeKey& key) const {
  if (const RuntimeEntry* e = find(key)) return *e;
  throw DataError("runtime table: no entry for " + key.function_id + " dim " +
                  std::to_string(key.dimension));
}

const RuntimeEntry* RuntimeTable::find(const RuntimeKey& key) const {
  auto it = entries_.find(key);
  return it == entries_.end() ? nullptr : &it->second;
}

std::vector<RuntimeKey> RuntimeTable::keys() const {
  std::vector<RuntimeKey> out;
  out.reserve(entries_.size());
  for (const auto& [k, _] : entries_) out.push_back(k);
  return out;
}

std::vector<std::pair<double, const RuntimeEntry*>> RuntimeTable::slice(
    const std::string& function_id, std::uint32_t dimension) const {
  std::vector<std::pair<double, const RuntimeEntry*>> out;
  for (const auto& [k, e] : entries_) {
    if (k.function_id == function_id && k.dimension == dimension) out.emplace_back(k.precision, &e);
  }
  return out;
}

TraceKey key_of(const RunTrace& trace) {
  return {trace.algorithm(), trace.triple().function_id, trace.triple().dimension,
          trace.triple().instance_id};
}

void DataSet::insert(RunTrace trace, std::string origin) {
  TraceKey key = key_of(trace);
  auto it = traces_.find(key);
  if (it != traces_.end()) {
    const auto describe = [](const std::string& o) { return o.empty() ? std::string("<memory>") : o; };
    throw DataError("duplicate trial (algorithm " + key.algorithm + ", function " +
                    key.function_id + ", dimension " + std::to_string(key.dimension) +
                    ", instance " + std::to_string(key.instance_id) + ") in " +
                    describe(it->second.origin) + " and " + describe(origin));
  }
  traces_.emplace(std::move(key), Stored{std::move(trace), std::move(origin)});
}

const RunTrace& DataSet::at(const TraceKey& key) const {
  auto it = traces_.find(key);
  if (it == traces_.end()) throw DataError("no trial for key " + key.algorithm + "/" + key.function_id);
  return it->second.trace;
}

const std::string& DataSet::origin(const TraceKey& key) const {
  auto it = traces_.find(key);
  if (it == traces_.end()) throw DataError("no trial for key " + key.algorithm + "/" + key.function_id);
  return it->second.origin;
}

std::vector<const RunTrace*> DataSet::group(const std::string& algorithm,
                                            const std::string& function_id,
                                            std::uint32_t dimension) const {
  std::vector<const RunTrace*> out;
  auto it = traces_.lower_bound(TraceKey{algorithm, function_id, dimension, 0});
  for (; it != traces_.end(); ++it) {
    const TraceKey& k = it->first;
    if (k.algorithm != algorithm || k.function_id != function_id || k.dimension != dimension) break;
    out.push_back(&it->second.trace);
  }
  return out;
}

std::vector<std::string> DataSet::algorithms() const {
  std::set<std::string> names;
  for (const auto& [k, _] : traces_) names.insert(k.algorithm);
  return {names.begin(), names.end()};
}

std::vector<std::string> DataSet::functions(const std::string& algorithm) const {
  std::set<std::string> names;
  for (const auto& [k, _] : traces_) {
    if (k.algorithm == algorithm) names.insert(k.function_id);
  }
  return {names.begin(), names.end()};
}

std::vector<std::uint32_t> DataSet::dimensions(const std::string& algorithm) const {
  std::set<std::uint32_t> dims;
  for (const auto& [k, _] : traces_) {
    if (k.algorithm == algorithm) dims.insert(k.dimension);
  }
  return {dims.begin(), dims.end()};
}

std::optional<std::uint64_t> DataSet::max_instance(const std::string& algorithm,
                                                   const std::string& function_id,
                                                   std::uint32_t dimension) const {
  const auto g = group(algorithm, function_id, dimension);
  if (g.empty()) return std::nullopt;
  return g.back()->triple().instance_id;
}

std::vector<const RunTrace*> DataSet::traces() const {
  std::vector<const RunTrace*> out;
  out.reserve(traces_.size());
  for (const auto& [_, s] : traces_) out.push_back(&s.trace);
  return out;
}

}  // namespace runfall
