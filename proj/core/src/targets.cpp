#include "runfall/targets.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <set>

#include "runfall/error.hpp"
#include "runfall/numfmt.hpp"
#include "runfall/runtime.hpp"

namespace runfall {

namespace {

// 10^e such that pow10_symmetric(-e) == 1 / pow10_symmetric(e) holds exactly.
// The value for e < 0 is moved by a few ulps, if needed, onto a double whose
// reciprocal round-trips; the value for e > 0 is its reciprocal.
double pow10_symmetric(double e) {
  if (e == 0.0) return 1.0;
  if (e > 0.0) return 1.0 / pow10_symmetric(-e);
  const double start = 1.0 / std::pow(10.0, -e);
  double up = start;
  double down = start;
  for (int i = 0; i < 64; ++i) {
    if (1.0 / (1.0 / up) == up) return up;
    if (1.0 / (1.0 / down) == down) return down;
    up = std::nextafter(up, std::numeric_limits<double>::infinity());
    down = std::nextafter(down, 0.0);
  }
  return start;
}

}  // namespace

TargetSet log_targets(double max_precision, double min_precision, std::size_t count) {
  if (!std::isfinite(max_precision) || !std::isfinite(min_precision) || !(min_precision > 0.0)) {
    throw InvalidArgument("log_targets: precisions must be finite and > 0");
  }
  if (!(max_precision > min_precision)) throw InvalidArgument("log_targets: max must exceed min");
  if (count < 2) throw InvalidArgument("log_targets: count must be >= 2");

  const double hi = std::log10(max_precision);
  double lo = std::log10(min_precision);
  if (max_precision * min_precision == 1.0) lo = -hi;
  const double intervals = static_cast<double>(count - 1);

  std::vector<double> out(count);
  for (std::size_t k = 0; k < count; ++k) {
    const double a = static_cast<double>(count - 1 - k) * hi;
    const double b = static_cast<double>(k) * lo;
    out[k] = pow10_symmetric((a + b) / intervals);
  }
  out.front() = max_precision;
  out.back() = min_precision;
  return TargetSet(std::move(out), TargetOrigin::fixed);
}

TargetSet parse_target_range(const std::string& text) {
  const auto first = text.find(':');
  const auto second = first == std::string::npos ? std::string::npos : text.find(':', first + 1);
  if (second == std::string::npos || text.find(':', second + 1) != std::string::npos) {
    throw InvalidArgument("target range must look like MAX:MIN:COUNT, got '" + text + "'");
  }
  const auto max = parse_double(std::string_view(text).substr(0, first));
  const auto min = parse_double(std::string_view(text).substr(first + 1, second - first - 1));
  const auto count = parse_uint(std::string_view(text).substr(second + 1));
  if (!max || !min || !count) throw InvalidArgument("target range must look like MAX:MIN:COUNT, got '" + text + "'");
  return log_targets(*max, *min, static_cast<std::size_t>(*count));
}

TargetSet default_target_grid() { return log_targets(1e2, 1e-8, 51); }

BudgetSet::BudgetSet(std::vector<double> budgets) : budgets_(std::move(budgets)) {
  if (budgets_.empty()) throw InvalidArgument("budget set is empty");
  for (std::size_t i = 0; i < budgets_.size(); ++i) {
    if (!(budgets_[i] > 0.0) || !std::isfinite(budgets_[i])) {
      throw InvalidArgument("budgets must be finite and > 0");
    }
    if (i > 0 && !(budgets_[i] > budgets_[i - 1])) {
      throw InvalidArgument("budgets must be strictly increasing");
    }
  }
}

BudgetSet default_expensive_budgets(std::uint32_t dimension, BudgetVariant variant) {
  if (dimension < 1) throw InvalidArgument("dimension must be >= 1");
  const double n = dimension;
  if (variant == BudgetVariant::five) {
    return BudgetSet({n / 2.0, n * 6.0 / 5.0, 3.0 * n, 10.0 * n, 50.0 * n});
  }
  constexpr std::size_t count = 31;
  std::vector<double> out(count);
  for (std::size_t k = 0; k < count; ++k) {
    out[k] = n / 2.0 * std::pow(100.0, static_cast<double>(k) / (count - 1));
  }
  out.front() = n / 2.0;
  out.back() = 50.0 * n;
  return BudgetSet(std::move(out));
}

bool default_unique(BudgetVariant variant) { return variant == BudgetVariant::five; }

TargetSet RunlengthTargets::to_target_set() const {
  std::set<double, std::greater<>> distinct;
  for (const auto& c : chosen) distinct.insert(c.precision);
  return TargetSet({distinct.begin(), distinct.end()}, TargetOrigin::runlength_based);
}

RunlengthTargets runlength_targets(const RuntimeTable& reference, const std::string& function_id,
                                   std::uint32_t dimension, const TargetSet& candidates,
                                   const BudgetSet& budgets, bool unique) {
  const auto precisions = candidates.precisions();
  if (precisions.empty()) throw InvalidArgument("runlength_targets: empty candidate set");

  std::vector<double> arts;
  arts.reserve(precisions.size());
  for (double p : precisions) {
    const RuntimeEntry* e = reference.find(RuntimeKey{function_id, dimension, p});
    if (!e) {
      throw DataError("runlength_targets: reference has no entry for " + function_id + " dim " +
                      std::to_string(dimension) + " precision " + format_double(p));
    }
    arts.push_back(art(*e));
  }

  RunlengthTargets result;
  std::vector<bool> taken(precisions.size(), false);
  for (double budget : budgets.budgets()) {
    std::size_t pick = precisions.size() - 1;
    bool fallback = true;
    for (std::size_t i = 0; i < precisions.size(); ++i) {
      if (arts[i] > budget && !(unique && taken[i])) {
        pick = i;
        fallback = false;
        break;
      }
    }
    taken[pick] = true;
    result.chosen.push_back({budget, precisions[pick], fallback});
  }
  return result;
}

}  // namespace runfall
