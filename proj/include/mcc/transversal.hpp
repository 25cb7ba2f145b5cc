#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "mcc/core.hpp"

namespace mcc {

/// Hypergraph over a ground set, stored as a lectically sorted antichain.
class Hypergraph {
 public:
  Hypergraph() = default;

  Hypergraph(GroundSet ground, std::vector<ElemSet> edges) : ground_(std::move(ground)) {
    const ElemSet all = ground_.all();
    for (const auto& e : edges) {
      if (e.empty()) throw Error(Errc::empty_edge, "hypergraph edges must be non-empty");
      if (!e.subset_of(all)) throw Error(Errc::invalid_instance, "edge outside the ground set");
    }
    edges_ = minimal_members(std::move(edges));
  }

  const GroundSet& ground() const { return ground_; }
  const std::vector<ElemSet>& edges() const { return edges_; }

 private:
  GroundSet ground_;
  std::vector<ElemSet> edges_;
};

inline bool is_independent(const Hypergraph& h, const ElemSet& y) {
  for (const auto& e : h.edges())
    if (e.subset_of(y)) return false;
  return true;
}

struct TransversalStats {
  std::size_t steps = 0;           // edges processed
  std::size_t peak_candidates = 0;  // largest intermediate family
};

/// Minimal hitting sets, built edge by edge: the minimal transversals of a
/// prefix are extended by each element of the next edge they miss, then
/// minimized. Edges are taken in lectic order.
inline std::vector<ElemSet> minimal_transversals(const Hypergraph& h, std::size_t cap = 1'000'000,
                                                 TransversalStats* stats = nullptr) {
  std::vector<ElemSet> current{ElemSet{}};
  for (const auto& edge : h.edges()) {
    std::vector<ElemSet> kept;
    std::vector<ElemSet> extended;
    for (const auto& t : current) {
      if (t.intersects(edge)) {
        kept.push_back(t);
        continue;
      }
      for (auto x : edge) extended.push_back(t.with(x));
    }
    // Kept sets are already pairwise incomparable; an extension is dropped
    // if some kept set or a smaller extension sits inside it.
    std::vector<ElemSet> fresh;
    for (const auto& c : minimal_members(std::move(extended))) {
      bool dominated = false;
      for (const auto& k : kept)
        if (k.subset_of(c)) {
          dominated = true;
          break;
        }
      if (!dominated) fresh.push_back(c);
    }
    kept.insert(kept.end(), fresh.begin(), fresh.end());
    current = std::move(kept);
    if (stats) {
      ++stats->steps;
      stats->peak_candidates = std::max(stats->peak_candidates, current.size());
    }
    if (current.size() > cap) {
      normalize(current);
      throw OutputLimitExceeded("transversal", cap, std::move(current));
    }
  }
  std::sort(current.begin(), current.end());
  return current;
}

/// Complements of the minimal transversals, lectically sorted.
inline std::vector<ElemSet> maximal_independent_sets(const Hypergraph& h, std::size_t cap = 1'000'000,
                                                     TransversalStats* stats = nullptr) {
  const std::size_t n = h.ground().size();
  std::vector<ElemSet> out;
  for (const auto& t : minimal_transversals(h, cap, stats)) out.push_back(t.complement(n));
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace mcc
