#pragma once

#include <cstddef>
#include <deque>
#include <string>
#include <vector>

#include "mcc/closure.hpp"
#include "mcc/core.hpp"

namespace mcc {

/// The base extended with uv -> U for every inconsistent pair uv. Its closed
/// sets are the closed sets of `base` that are consistent, plus U.
inline ImplicationalBase augment_with_inconsistency(const ImplicationalBase& base, const ConsistencyGraph& graph) {
  if (!(base.ground() == graph.ground()))
    throw Error(Errc::mismatched_ground_sets, "graph and base are over different ground sets");
  if (graph.empty()) throw Error(Errc::empty_graph, "no inconsistent pairs to add");
  std::vector<Implication> imps = base.implications();
  for (const auto& e : graph.edges()) imps.push_back({ConsistencyGraph::pair_set(e), base.all()});
  return ImplicationalBase(base.ground(), std::move(imps));
}

struct KeyHypergraph {
  GroundSet ground;
  std::vector<ElemSet> keys;  // lectic order
};

inline bool is_superkey(const ImplicationalBase& base, const ElemSet& s) { return close(base, s) == base.all(); }

/// Shrinks a superkey to a key by dropping elements from the highest index
/// down whenever the rest still spans U.
inline ElemSet minimize_superkey(const ImplicationalBase& base, const ElemSet& s) {
  if (!is_superkey(base, s)) throw Error(Errc::not_a_superkey, "set does not close to the ground set");
  ElemSet key = s;
  auto members = s.to_vector();
  for (auto it = members.rbegin(); it != members.rend(); ++it) {
    const ElemSet smaller = key.without(*it);
    if (is_superkey(base, smaller)) key = smaller;
  }
  return key;
}

/// All keys of the closure system of `base` (Lucchesi-Osborn saturation).
///
/// Starting from one key, each known key K and implication A -> B with B
/// meeting K yields the superkey A + (K - B); when no known key lies inside
/// it, it is minimized into a new key. Keys are processed FIFO.
inline KeyHypergraph enumerate_keys(const ImplicationalBase& base, std::size_t cap = 1'000'000) {
  std::vector<ElemSet> keys{minimize_superkey(base, base.all())};
  std::deque<std::size_t> work{0};
  const auto& imps = base.implications();
  while (!work.empty()) {
    const ElemSet k = keys[work.front()];
    work.pop_front();
    for (const auto& imp : imps) {
      if (!imp.conclusion.intersects(k)) continue;
      const ElemSet s = imp.premise | (k - imp.conclusion);
      bool covered = false;
      for (const auto& known : keys)
        if (known.subset_of(s)) {
          covered = true;
          break;
        }
      if (covered) continue;
      keys.push_back(minimize_superkey(base, s));
      work.push_back(keys.size() - 1);
      if (keys.size() > cap) {
        keys.resize(cap);
        std::sort(keys.begin(), keys.end());
        throw OutputLimitExceeded("keys", cap, std::move(keys));
      }
    }
  }
  std::sort(keys.begin(), keys.end());
  return {base.ground(), std::move(keys)};
}

struct KeyDecomposition {
  Edge edge;
  ElemSet gen_u;
  ElemSet gen_v;
};

/// Writes a key of the augmented system as the union of a minimal generator
/// of u and one of v (under `base`, not the augmented base) for some
/// inconsistent pair uv. The first witness in edge order, then lectic
/// generator order, is returned.
inline KeyDecomposition key_decomposition(const ImplicationalBase& base, const ConsistencyGraph& graph,
                                          const ElemSet& key) {
  for (const auto& e : graph.edges()) {
    // Generators inside the key are generators in the whole ground set.
    const auto gens_u = minimal_generators_within(base, e.first, key);
    if (gens_u.empty()) continue;
    const auto gens_v = minimal_generators_within(base, e.second, key);
    for (const auto& a : gens_u)
      for (const auto& b : gens_v)
        if ((a | b) == key) return {e, a, b};
  }
  throw Error(Errc::no_decomposition, "key is not a union of two minimal generators of an inconsistent pair");
}

}  // namespace mcc
