#pragma once

#include <vector>

#include "mcc/closure.hpp"
#include "mcc/keys.hpp"
#include "mcc/transversal.hpp"

namespace mcc {

/// Closed sets covered by U, as the maximal independent sets of the key
/// hypergraph. If the key route hits a cap on a small ground set, the
/// closed-set family is scanned instead.
inline std::vector<ElemSet> co_atoms(const ImplicationalBase& base, const Limits& limits = {}) {
  try {
    const auto keys = enumerate_keys(base, limits.key_cap);
    for (const auto& k : keys.keys)
      if (k.empty()) return {};  // cl(empty) = U: the lattice is a single point
    return maximal_independent_sets(Hypergraph(base.ground(), keys.keys), limits.mis_cap);
  } catch (const OutputLimitExceeded&) {
    if (base.size() > limits.exhaustive) throw;
  }
  const ElemSet top = base.all();
  std::vector<ElemSet> proper;
  for_each_closed_set(base, [&](const ElemSet& f) {
    if (f != top) proper.push_back(f);
  });
  return maximal_members(std::move(proper));
}

}  // namespace mcc
