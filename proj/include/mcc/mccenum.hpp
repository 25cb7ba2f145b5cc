#pragma once

#include <chrono>
#include <cstddef>
#include <string>
#include <vector>

#include "mcc/closure.hpp"
#include "mcc/core.hpp"
#include "mcc/keys.hpp"
#include "mcc/transversal.hpp"

namespace mcc {

struct SolveStats {
  std::size_t key_count = 0;
  std::size_t transversal_steps = 0;
  double key_seconds = 0;
  double transversal_seconds = 0;
};

/// Maximal consistent closed sets. When `complete` is false a cap was hit:
/// `sets` is empty, `incomplete_phase` names the phase and `partial_keys`
/// holds the keys found before stopping.
struct SolutionSet {
  GroundSet ground;
  std::vector<ElemSet> sets;  // lectic order
  SolveStats stats;
  std::vector<ElemSet> keys;  // key hypergraph of the augmented base
  bool complete = true;
  std::string incomplete_phase;
  std::vector<ElemSet> partial_keys;
};

namespace detail {
inline double seconds_since(std::chrono::steady_clock::time_point t0) {
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}
}  // namespace detail

/// Two-phase solver: keys of the base augmented with uv -> U for each
/// inconsistent pair, then the maximal independent sets of that key
/// hypergraph.
/// Throws unless the instance is usable by the solvers (no self-loops).
inline void require_valid(const ImplicationalBase& base, const ConsistencyGraph& graph) {
  const auto report = validate_instance(base, graph);
  if (report.valid) return;
  std::string labels;
  for (const auto& l : report.self_loops) labels += " " + l;
  throw Error(Errc::invalid_instance, "self-loop edges on:" + labels);
}

inline SolutionSet solve(const ImplicationalBase& base, const ConsistencyGraph& graph, const Limits& limits = {}) {
  require_valid(base, graph);
  SolutionSet out;
  out.ground = base.ground();
  if (graph.empty()) {
    out.sets.push_back(base.all());
    return out;
  }
  const auto augmented = augment_with_inconsistency(base, graph);

  auto t0 = std::chrono::steady_clock::now();
  try {
    out.keys = enumerate_keys(augmented, limits.key_cap).keys;
  } catch (const OutputLimitExceeded& e) {
    out.complete = false;
    out.incomplete_phase = e.phase();
    out.partial_keys = e.partial();
    out.stats.key_count = e.partial().size();
    out.stats.key_seconds = detail::seconds_since(t0);
    return out;
  }
  out.stats.key_seconds = detail::seconds_since(t0);
  out.stats.key_count = out.keys.size();

  // An empty key means cl(empty) is already inconsistent: nothing qualifies.
  if (!out.keys.empty() && out.keys.front().empty()) return out;

  t0 = std::chrono::steady_clock::now();
  TransversalStats ts;
  try {
    out.sets = maximal_independent_sets(Hypergraph(base.ground(), out.keys), limits.mis_cap, &ts);
  } catch (const OutputLimitExceeded& e) {
    out.complete = false;
    out.incomplete_phase = e.phase();
    out.partial_keys = out.keys;
  }
  out.stats.transversal_steps = ts.steps;
  out.stats.transversal_seconds = detail::seconds_since(t0);
  return out;
}

/// Reference solver: scan every closed set, keep the consistent ones, and
/// reduce to the inclusion-maximal members.
inline SolutionSet brute_force_solve(const ImplicationalBase& base, const ConsistencyGraph& graph,
                                     const Limits& limits = {}) {
  require_valid(base, graph);
  require_exhaustive(base.size(), limits, "brute-force solve");
  SolutionSet out;
  out.ground = base.ground();
  std::vector<ElemSet> consistent;
  for_each_closed_set(base, [&](const ElemSet& f) {
    if (graph.is_consistent(f)) consistent.push_back(f);
  });
  out.sets = maximal_members(std::move(consistent));
  return out;
}

/// F is closed, consistent, and adding any outside element and closing
/// reaches an inconsistent set.
inline bool is_solution(const ImplicationalBase& base, const ConsistencyGraph& graph, const ElemSet& f) {
  if (!f.subset_of(base.all())) return false;
  if (!is_closed(base, f) || !graph.is_consistent(f)) return false;
  for (auto x : base.all() - f)
    if (graph.is_consistent(close(base, f.with(x)))) return false;
  return true;
}

}  // namespace mcc
