#pragma once

#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

#include "mcc/core.hpp"

namespace mcc {

/// Forward chaining with a per-implication counter of premise elements not
/// yet derived. Each element is propagated once, so a call costs
/// O(|U| + total premise size).
inline ElemSet close(const ImplicationalBase& base, const ElemSet& y) {
  ElemSet result = y;
  std::vector<std::uint32_t> missing = base.premise_sizes();
  std::vector<std::size_t> queue;
  queue.reserve(base.size());

  const auto& imps = base.implications();
  for (auto r : base.empty_premise_rules()) result |= imps[r].conclusion;
  for (auto e : result) queue.push_back(e);

  for (std::size_t head = 0; head < queue.size(); ++head) {
    for (auto r : base.occurrences(queue[head])) {
      if (--missing[r] != 0) continue;
      const ElemSet fresh = imps[r].conclusion - result;
      if (fresh.empty()) continue;
      result |= fresh;
      for (auto e : fresh) queue.push_back(e);
    }
  }
  return result;
}

inline bool is_closed(const ImplicationalBase& base, const ElemSet& y) { return close(base, y) == y; }

inline void require_exhaustive(std::size_t n, const Limits& limits, const char* what) {
  if (n > limits.exhaustive)
    throw Error(Errc::ground_set_too_large, std::string(what) + " needs |U| <= " +
                                                std::to_string(limits.exhaustive) + ", got " +
                                                std::to_string(n));
}

/// Calls `visit` on every closed set in lectic order (next-closure).
template <class Visitor>
void for_each_closed_set(const ImplicationalBase& base, Visitor&& visit) {
  const std::size_t n = base.size();
  const ElemSet top = base.all();
  ElemSet current = close(base, ElemSet{});
  visit(current);
  while (current != top) {
    bool advanced = false;
    // Elements above i are more significant; try the least significant
    // absent element first.
    ElemSet above = top;
    for (std::size_t i = 0; i < n; ++i) {
      above.erase(i);
      if (current.contains(i)) continue;
      const ElemSet prefix = current & above;
      const ElemSet next = close(base, prefix.with(i));
      if ((next & above) == prefix) {
        current = next;
        advanced = true;
        break;
      }
    }
    if (!advanced) break;
    visit(current);
  }
}

struct ClosedSetFamily {
  GroundSet ground;
  std::vector<ElemSet> sets;  // lectic order
};

inline ClosedSetFamily enumerate_closed_sets(const ImplicationalBase& base, const Limits& limits = {}) {
  require_exhaustive(base.size(), limits, "closed-set enumeration");
  ClosedSetFamily family{base.ground(), {}};
  for_each_closed_set(base, [&](const ElemSet& f) { family.sets.push_back(f); });
  return family;
}

/// Upper covers of the closed set `f`. Every cover of f is cl(f + x) for
/// each x it adds, so the minimal such closures are exactly the covers.
inline std::vector<ElemSet> covers(const ImplicationalBase& base, const ElemSet& f) {
  if (!is_closed(base, f)) throw Error(Errc::not_closed, "covers() needs a closed set");
  std::vector<ElemSet> candidates;
  for (auto x : base.all() - f) candidates.push_back(close(base, f.with(x)));
  return minimal_members(std::move(candidates));
}

struct MeetIrreducible {
  ElemSet set;
  ElemSet cover;
};

/// Closed sets other than U with exactly one upper cover, in lectic order.
inline std::vector<MeetIrreducible> meet_irreducibles(const ImplicationalBase& base,
                                                      const Limits& limits = {}) {
  require_exhaustive(base.size(), limits, "meet-irreducible computation");
  std::vector<MeetIrreducible> out;
  const ElemSet top = base.all();
  for_each_closed_set(base, [&](const ElemSet& m) {
    if (m == top) return;
    auto up = covers(base, m);
    if (up.size() == 1) out.push_back({m, up.front()});
  });
  return out;
}

struct MinGenRecord {
  std::size_t element = 0;
  std::vector<ElemSet> generators;  // lectic order
};

/// Inclusion-minimal subsets A of `within` with x in cl(A).
///
/// Level-wise search by size over free sets (no member lies in the closure
/// of the others); every minimal generator is free and free sets are closed
/// under taking subsets, so the search is complete.
inline std::vector<ElemSet> minimal_generators_within(const ImplicationalBase& base, std::size_t x,
                                                      const ElemSet& within, std::size_t max_size = 0) {
  if (max_size == 0) max_size = base.size();
  std::vector<ElemSet> found;
  if (close(base, ElemSet{}).contains(x)) return {ElemSet{}};
  if (within.contains(x)) found.push_back(ElemSet::singleton(x));

  const ElemSet pool = within.without(x);
  std::vector<ElemSet> level{ElemSet{}};
  for (std::size_t k = 1; k <= max_size && !level.empty(); ++k) {
    std::vector<ElemSet> next;
    for (const auto& s : level) {
      const ElemSet closure_s = close(base, s);
      for (auto a : pool) {
        if (!s.empty() && a <= s.max()) continue;
        if (closure_s.contains(a)) continue;
        const ElemSet t = s.with(a);
        bool dominated = false;
        for (const auto& g : found)
          if (g.subset_of(t)) {
            dominated = true;
            break;
          }
        if (dominated) continue;
        if (close(base, t).contains(x)) {
          found.push_back(t);
          continue;
        }
        bool free = true;
        for (auto b : s)
          if (close(base, t.without(b)).contains(b)) {
            free = false;
            break;
          }
        if (free) next.push_back(t);
      }
    }
    level = std::move(next);
  }
  std::sort(found.begin(), found.end());
  return found;
}

/// All minimal generators of x, the trivial generator {x} included. If x is
/// already in cl(empty) the only minimal generator is the empty set.
inline MinGenRecord minimal_generators(const ImplicationalBase& base, std::size_t x, const Limits& limits = {}) {
  return {x, minimal_generators_within(base, x, base.all(), limits.mingen_size)};
}

/// Largest minimal generator size; 1 when only trivial generators exist.
inline std::size_t caratheodory_number(const ImplicationalBase& base, const Limits& limits = {}) {
  std::size_t c = 1;
  for (std::size_t x = 0; x < base.size(); ++x)
    for (const auto& g : minimal_generators(base, x, limits).generators) c = std::max(c, g.size());
  return c;
}

}  // namespace mcc
