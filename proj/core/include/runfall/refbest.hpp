#pragma once

// Artificial best algorithm: per (function, dimension, precision), the data
// of the algorithm with the smallest aRT.

#include <cstddef>
#include <map>
#include <string>

#include "runfall/model.hpp"

namespace runfall {

using AlgorithmTables = std::map<std::string, RuntimeTable>;

struct Selection {
  std::string algorithm;
  double art = 0.0;
  std::size_t successes = 0;
  std::size_t instances = 0;

  friend bool operator==(const Selection&, const Selection&) = default;
};

using SelectionMap = std::map<RuntimeKey, Selection>;

/// Minimum aRT per key. Ties go to the higher success count, then to the
/// lexicographically smallest name; keys where every aRT is +inf still get a
/// selection. Throws InvalidArgument without tables and DataError when the
/// tables do not share the same key grid.
SelectionMap select_best(const AlgorithmTables& tables);

/// Copies, per key, the successes and failures of the selected algorithm.
/// Throws DataError when a selection names a missing table or key.
RuntimeTable compose_virtual_dataset(const SelectionMap& selection, const AlgorithmTables& tables);

}  // namespace runfall
