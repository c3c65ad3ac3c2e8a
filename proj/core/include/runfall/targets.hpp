#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "runfall/model.hpp"

namespace runfall {

/// `count` precisions uniform in log10 from max_precision down to
/// min_precision, both included. Precisions below 1 are computed as exact
/// reciprocals of their mirror above 1, so a range with max * min == 1 is
/// symmetric under reversal plus reciprocal.
TargetSet log_targets(double max_precision, double min_precision, std::size_t count);

/// Parses "MAX:MIN:COUNT" into log_targets.
TargetSet parse_target_range(const std::string& text);

/// Candidate grid for runlength-based targets: 1e2 down to 1e-8, 51 values.
TargetSet default_target_grid();

/// Strictly increasing positive evaluation budgets.
class BudgetSet {
 public:
  explicit BudgetSet(std::vector<double> budgets);

  std::span<const double> budgets() const noexcept { return budgets_; }
  std::size_t size() const noexcept { return budgets_.size(); }

 private:
  std::vector<double> budgets_;
};

enum class BudgetVariant { five, thirtyone };

/// five: {0.5n, 1.2n, 3n, 10n, 50n}; thirtyone: 31 budgets log-uniform from
/// 0.5n to 50n.
BudgetSet default_expensive_budgets(std::uint32_t dimension, BudgetVariant variant);

/// Whether rule (ii) (no target chosen twice) is on by default for a variant.
bool default_unique(BudgetVariant variant);

struct RunlengthTarget {
  double budget = 0.0;
  double precision = 0.0;
  /// True when no candidate's reference aRT exceeds the budget (or all such
  /// candidates were already taken) and the final target was used.
  bool is_final_fallback = false;
};

/// One chosen precision per budget, in budget order. May repeat.
struct RunlengthTargets {
  std::vector<RunlengthTarget> chosen;

  /// Distinct chosen precisions as a runlength-based TargetSet.
  TargetSet to_target_set() const;
};

/// For each budget, smallest first: the largest candidate precision whose
/// reference aRT exceeds the budget and, when `unique`, that was not chosen
/// for a smaller budget. Falls back to the final (smallest) candidate.
///
/// `reference` must hold an entry for every candidate precision at
/// (function_id, dimension). Entries without successes have aRT = +inf.
RunlengthTargets runlength_targets(const RuntimeTable& reference, const std::string& function_id,
                                   std::uint32_t dimension, const TargetSet& candidates,
                                   const BudgetSet& budgets, bool unique);

}  // namespace runfall
