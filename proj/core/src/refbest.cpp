#include "runfall/refbest.hpp"

#include "runfall/error.hpp"
#include "runfall/runtime.hpp"

namespace runfall {

SelectionMap select_best(const AlgorithmTables& tables) {
  if (tables.empty()) throw InvalidArgument("select_best: no algorithms");
  const auto& [first_name, first_table] = *tables.begin();
  const std::vector<RuntimeKey> grid = first_table.keys();
  for (const auto& [name, table] : tables) {
    if (table.keys() != grid) {
      throw DataError("select_best: runtime grid of " + name + " differs from that of " + first_name);
    }
  }

  SelectionMap selection;
  for (const RuntimeKey& key : grid) {
    std::optional<Selection> best;
    // Map order is lexicographic, so keeping the incumbent on a full tie keeps
    // the smallest name.
    for (const auto& [name, table] : tables) {
      const RuntimeEntry& entry = table.at(key);
      Selection candidate{name, art(entry), entry.successes.size(), entry.instance_count()};
      if (!best || candidate.art < best->art ||
          (candidate.art == best->art && candidate.successes > best->successes)) {
        best = std::move(candidate);
      }
    }
    selection.emplace(key, std::move(*best));
  }
  return selection;
}

RuntimeTable compose_virtual_dataset(const SelectionMap& selection, const AlgorithmTables& tables) {
  RuntimeTable out;
  for (const auto& [key, chosen] : selection) {
    auto it = tables.find(chosen.algorithm);
    if (it == tables.end()) throw DataError("compose: no runtime table for " + chosen.algorithm);
    const RuntimeEntry* entry = it->second.find(key);
    if (!entry) throw DataError("compose: " + chosen.algorithm + " has no entry for " + key.function_id);
    out.insert(key, *entry);
  }
  return out;
}

}  // namespace runfall
