#pragma once

#include <algorithm>
#include <cstddef>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "mcc/closure.hpp"
#include "mcc/core.hpp"

namespace mcc {

/// Outcome of a structural check. A failing check always carries the sets
/// that violate the definition.
struct CheckResult {
  bool holds = true;
  std::vector<ElemSet> witness;
  std::string detail;

  explicit operator bool() const { return holds; }

  static CheckResult pass() { return {}; }
  static CheckResult fail(std::vector<ElemSet> witness, std::string detail) {
    return {false, std::move(witness), std::move(detail)};
  }
};

// ---------------------------------------------------------------------------
// Basic shape of the closure system

/// cl(empty) = empty, and cl(x) - x is closed for every x.
inline CheckResult check_standard(const ImplicationalBase& base) {
  const ElemSet bottom = close(base, ElemSet{});
  if (!bottom.empty()) return CheckResult::fail({ElemSet{}, bottom}, "closure of the empty set is not empty");
  for (std::size_t x = 0; x < base.size(); ++x) {
    const ElemSet lower = close(base, ElemSet::singleton(x)).without(x);
    if (!is_closed(base, lower))
      return CheckResult::fail({ElemSet::singleton(x), lower}, "cl(x) - x is not closed");
  }
  return CheckResult::pass();
}

inline CheckResult check_atomistic(const ImplicationalBase& base) {
  for (std::size_t x = 0; x < base.size(); ++x) {
    const ElemSet cx = close(base, ElemSet::singleton(x));
    if (cx.size() != 1) return CheckResult::fail({ElemSet::singleton(x), cx}, "singleton is not closed");
  }
  return CheckResult::pass();
}

/// Closed sets covering cl(empty).
inline std::vector<ElemSet> atoms(const ImplicationalBase& base) { return covers(base, close(base, ElemSet{})); }

/// For closed F1, F2 above the bottom and an atom X inside cl(F1 + F2),
/// some atoms X1 in F1 and X2 in F2 have X inside cl(X1 + X2).
/// Witness: {F1, F2, X}.
inline CheckResult check_biatomic(const ImplicationalBase& base, const Limits& limits = {}) {
  const auto family = enumerate_closed_sets(base, limits).sets;
  const ElemSet bottom = close(base, ElemSet{});
  const auto all_atoms = atoms(base);

  std::vector<std::vector<ElemSet>> atoms_below(family.size());
  for (std::size_t i = 0; i < family.size(); ++i)
    for (const auto& a : all_atoms)
      if (a.subset_of(family[i])) atoms_below[i].push_back(a);

  for (std::size_t i = 0; i < family.size(); ++i) {
    if (family[i] == bottom) continue;
    for (std::size_t j = i; j < family.size(); ++j) {
      if (family[j] == bottom) continue;
      const ElemSet join = close(base, family[i] | family[j]);
      for (const auto& x : all_atoms) {
        if (!x.subset_of(join) || x.subset_of(family[i]) || x.subset_of(family[j])) continue;
        bool witnessed = false;
        for (const auto& x1 : atoms_below[i]) {
          for (const auto& x2 : atoms_below[j])
            if (x.subset_of(close(base, x1 | x2))) {
              witnessed = true;
              break;
            }
          if (witnessed) break;
        }
        if (!witnessed)
          return CheckResult::fail({family[i], family[j], x}, "atom below F1 v F2 but below no join of two atoms");
      }
    }
  }
  return CheckResult::pass();
}

/// The single-set form valid in biatomic atomistic systems: for closed F and
/// x, y outside F with y in cl(F + x), some z in F has y in cl(xz).
/// Witness: {F, {x}, {y}}.
inline CheckResult check_biatomic_point_form(const ImplicationalBase& base, const Limits& limits = {}) {
  const auto family = enumerate_closed_sets(base, limits).sets;
  const ElemSet top = base.all();
  for (const auto& f : family) {
    for (auto x : top - f) {
      const ElemSet reach = close(base, f.with(x));
      for (auto y : reach - f) {
        if (y == x) continue;
        bool witnessed = false;
        for (auto z : f)
          if (close(base, ElemSet{x, z}).contains(y)) {
            witnessed = true;
            break;
          }
        if (!witnessed)
          return CheckResult::fail({f, ElemSet::singleton(x), ElemSet::singleton(y)},
                                   "y in cl(F + x) but in no cl(xz) with z in F");
      }
    }
  }
  return CheckResult::pass();
}

/// Union-closed family. Witness: {F1, F2}.
inline CheckResult check_distributive(const ImplicationalBase& base, const Limits& limits = {}) {
  const auto family = enumerate_closed_sets(base, limits).sets;
  for (std::size_t i = 0; i < family.size(); ++i)
    for (std::size_t j = i + 1; j < family.size(); ++j)
      if (!is_closed(base, family[i] | family[j]))
        return CheckResult::fail({family[i], family[j]}, "union of closed sets is not closed");
  return CheckResult::pass();
}

/// F1 in F2 implies cl(F1 + (F2 & F3)) = cl(F1 + F3) & F2. Witness: {F1, F2, F3}.
inline CheckResult check_modular(const ImplicationalBase& base, const Limits& limits = {}) {
  const auto family = enumerate_closed_sets(base, limits).sets;
  for (const auto& f1 : family)
    for (const auto& f2 : family) {
      if (!f1.subset_of(f2)) continue;
      for (const auto& f3 : family)
        if (close(base, f1 | (f2 & f3)) != (close(base, f1 | f3) & f2))
          return CheckResult::fail({f1, f2, f3}, "modular law fails");
    }
  return CheckResult::pass();
}

// ---------------------------------------------------------------------------
// Independence

/// For all Y1, Y2 inside A: cl(Y1 & Y2) = cl(Y1) & cl(Y2). Witness: {Y1, Y2}.
inline CheckResult check_independent(const ImplicationalBase& base, const ElemSet& a, const Limits& limits = {}) {
  const std::size_t k = a.size();
  if (k > limits.independence_set)
    throw Error(Errc::set_too_large, "independence test needs |A| <= " + std::to_string(limits.independence_set));
  const auto members = a.to_vector();
  const std::size_t count = std::size_t{1} << k;
  std::vector<ElemSet> sub(count);
  std::vector<ElemSet> closure(count);
  for (std::size_t mask = 0; mask < count; ++mask) {
    for (std::size_t b = 0; b < k; ++b)
      if (mask >> b & 1u) sub[mask].insert(members[b]);
    closure[mask] = close(base, sub[mask]);
  }
  for (std::size_t m1 = 0; m1 < count; ++m1)
    for (std::size_t m2 = m1 + 1; m2 < count; ++m2)
      if (closure[m1 & m2] != (closure[m1] & closure[m2]))
        return CheckResult::fail({sub[m1], sub[m2]}, "cl(Y1 & Y2) != cl(Y1) & cl(Y2)");
  return CheckResult::pass();
}

/// Chain form of independence for modular systems, members taken in index
/// order: cl(a1..ai) & cl(a(i+1)) = cl(empty) for every i.
inline bool independence_chain_condition(const ImplicationalBase& base, const ElemSet& a) {
  const ElemSet bottom = close(base, ElemSet{});
  ElemSet prefix;
  for (auto x : a) {
    if (!prefix.empty() && (close(base, prefix) & close(base, ElemSet::singleton(x))) != bottom) return false;
    prefix.insert(x);
  }
  return true;
}

/// Every minimal generator of every element is independent.
/// Witness: {generator, Y1, Y2}.
inline CheckResult check_mingen_independence(const ImplicationalBase& base, const Limits& limits = {}) {
  for (std::size_t x = 0; x < base.size(); ++x)
    for (const auto& g : minimal_generators(base, x, limits).generators) {
      auto r = check_independent(base, g, limits);
      if (!r) {
        r.witness.insert(r.witness.begin(), g);
        r.detail = "minimal generator of " + base.ground().label(x) + " is not independent";
        return r;
      }
    }
  return CheckResult::pass();
}

// ---------------------------------------------------------------------------
// Minimal-generator structure

namespace detail {
inline bool generates_minimally(const ImplicationalBase& base, const ElemSet& a, std::size_t y) {
  if (!close(base, a).contains(y)) return false;
  for (auto b : a)
    if (close(base, a.without(b)).contains(y)) return false;
  return true;
}

template <class Fn>
void for_each_subset(const ElemSet& a, Fn&& fn) {
  const auto members = a.to_vector();
  const std::size_t count = std::size_t{1} << members.size();
  for (std::size_t mask = 0; mask < count; ++mask) {
    ElemSet s;
    for (std::size_t b = 0; b < members.size(); ++b)
      if (mask >> b & 1u) s.insert(members[b]);
    fn(s);
  }
}

inline std::vector<std::pair<std::size_t, ElemSet>> all_generators(const ImplicationalBase& base,
                                                                   const Limits& limits) {
  std::vector<std::pair<std::size_t, ElemSet>> out;
  for (std::size_t x = 0; x < base.size(); ++x)
    for (const auto& g : minimal_generators(base, x, limits).generators) out.emplace_back(x, g);
  return out;
}
}  // namespace detail

/// cl(A) & Ax = A for every minimal generator Ax and every A inside it.
/// Witness: {Ax, A}.
inline CheckResult check_trace_property(const ImplicationalBase& base, const Limits& limits = {}) {
  for (const auto& [x, g] : detail::all_generators(base, limits)) {
    std::optional<ElemSet> bad;
    detail::for_each_subset(g, [&](const ElemSet& a) {
      if (!bad && (close(base, a) & g) != a) bad = a;
    });
    if (bad) return CheckResult::fail({g, *bad}, "closure of a subset picks up more of the generator");
  }
  return CheckResult::pass();
}

/// Removing one member from a minimal generator of size >= 2 leaves a minimal
/// generator of some element. Witness: {Ax, Ax - a}.
inline CheckResult check_generator_deletion(const ImplicationalBase& base, const Limits& limits = {}) {
  for (const auto& [x, g] : detail::all_generators(base, limits)) {
    if (g.size() < 2) continue;
    for (auto a : g) {
      const ElemSet rest = g.without(a);
      bool found = false;
      for (auto y : close(base, rest))
        if (detail::generates_minimally(base, rest, y)) {
          found = true;
          break;
        }
      if (!found) return CheckResult::fail({g, rest}, "deleting a member leaves no minimal generator");
    }
  }
  return CheckResult::pass();
}

/// Every non-empty subset of a minimal generator is a minimal generator of
/// some element. Witness: {Ax, A}.
inline CheckResult check_generator_subsets(const ImplicationalBase& base, const Limits& limits = {}) {
  for (const auto& [x, g] : detail::all_generators(base, limits)) {
    std::optional<ElemSet> bad;
    detail::for_each_subset(g, [&](const ElemSet& a) {
      if (bad || a.empty()) return;
      for (auto y : close(base, a))
        if (detail::generates_minimally(base, a, y)) return;
      bad = a;
    });
    if (bad) return CheckResult::fail({g, *bad}, "subset of a generator generates nothing minimally");
  }
  return CheckResult::pass();
}

/// For every minimal generator Ax and non-empty A inside it, some y has A as
/// the unique minimum subset B of Ax with y in cl(B), i.e. y in cl(B) iff A
/// is inside B. Witness: {Ax, A}.
inline CheckResult check_unique_minimum_subsets(const ImplicationalBase& base, const Limits& limits = {}) {
  for (const auto& [x, g] : detail::all_generators(base, limits)) {
    std::vector<ElemSet> subsets;
    detail::for_each_subset(g, [&](const ElemSet& b) { subsets.push_back(b); });
    std::vector<ElemSet> closures;
    closures.reserve(subsets.size());
    for (const auto& b : subsets) closures.push_back(close(base, b));
    for (std::size_t i = 0; i < subsets.size(); ++i) {
      const ElemSet& a = subsets[i];
      if (a.empty()) continue;
      bool found = false;
      for (auto y : closures[i]) {
        bool unique = true;
        for (std::size_t j = 0; j < subsets.size() && unique; ++j)
          if (closures[j].contains(y) != a.subset_of(subsets[j])) unique = false;
        if (unique) {
          found = true;
          break;
        }
      }
      if (!found) return CheckResult::fail({g, a}, "no element has this subset as its unique minimum");
    }
  }
  return CheckResult::pass();
}

// ---------------------------------------------------------------------------
// Arrow relations and the D relation

struct ArrowRelations {
  std::vector<MeetIrreducible> meet_irreducibles;
  /// (x, m): x is outside M but inside M*.
  std::vector<std::pair<std::size_t, std::size_t>> down;
  /// (m, x): x is outside M and cl(x) - x is inside M.
  std::vector<std::pair<std::size_t, std::size_t>> up;
};

inline ArrowRelations arrow_relations(const ImplicationalBase& base, const Limits& limits = {}) {
  require_exhaustive(base.size(), limits, "arrow relations");
  if (auto st = check_standard(base); !st)
    throw Error(Errc::not_standard, "arrow relations need a standard closure system (" + st.detail + ")");
  ArrowRelations r;
  r.meet_irreducibles = meet_irreducibles(base, limits);
  std::vector<ElemSet> lower(base.size());
  for (std::size_t x = 0; x < base.size(); ++x) lower[x] = close(base, ElemSet::singleton(x)).without(x);
  for (std::size_t m = 0; m < r.meet_irreducibles.size(); ++m) {
    const auto& [set, cover] = r.meet_irreducibles[m];
    for (std::size_t x = 0; x < base.size(); ++x) {
      if (set.contains(x)) continue;
      if (cover.contains(x)) r.down.emplace_back(x, m);
      if (lower[x].subset_of(set)) r.up.emplace_back(m, x);
    }
  }
  return r;
}

struct DRelation {
  /// (x, y) with x != y and x down M up y for some meet-irreducible M.
  std::vector<std::pair<std::size_t, std::size_t>> arcs;
  /// Elements x with x down M up x; kept apart from `arcs`.
  std::vector<std::size_t> reflexive;
};

inline DRelation d_relation(const ImplicationalBase& base, const Limits& limits = {}) {
  const auto arrows = arrow_relations(base, limits);
  const std::size_t mcount = arrows.meet_irreducibles.size();
  std::vector<std::vector<std::size_t>> down_of(mcount), up_of(mcount);
  for (auto [x, m] : arrows.down) down_of[m].push_back(x);
  for (auto [m, y] : arrows.up) up_of[m].push_back(y);
  DRelation d;
  for (std::size_t m = 0; m < mcount; ++m)
    for (auto x : down_of[m])
      for (auto y : up_of[m]) {
        if (x == y)
          d.reflexive.push_back(x);
        else
          d.arcs.emplace_back(x, y);
      }
  std::sort(d.arcs.begin(), d.arcs.end());
  d.arcs.erase(std::unique(d.arcs.begin(), d.arcs.end()), d.arcs.end());
  std::sort(d.reflexive.begin(), d.reflexive.end());
  d.reflexive.erase(std::unique(d.reflexive.begin(), d.reflexive.end()), d.reflexive.end());
  return d;
}

struct DCycle {
  bool found = false;
  /// x1, ..., xk with x1 D x2 D ... D xk D x1.
  std::vector<std::size_t> cycle;
  std::vector<std::size_t> reflexive;
};

/// Directed cycle of length >= 2 in the D digraph, found by locating a
/// strongly connected component with more than one vertex.
inline DCycle has_d_cycle(const ImplicationalBase& base, const Limits& limits = {}) {
  const auto d = d_relation(base, limits);
  const std::size_t n = base.size();
  std::vector<std::vector<std::size_t>> adj(n);
  for (auto [x, y] : d.arcs) adj[x].push_back(y);

  // Tarjan, iterative.
  std::vector<int> index(n, -1), low(n, 0), comp(n, -1);
  std::vector<char> on_stack(n, 0);
  std::vector<std::size_t> stack;
  int counter = 0, comps = 0;
  for (std::size_t root = 0; root < n; ++root) {
    if (index[root] != -1) continue;
    std::vector<std::pair<std::size_t, std::size_t>> call{{root, 0}};
    index[root] = low[root] = counter++;
    stack.push_back(root);
    on_stack[root] = 1;
    while (!call.empty()) {
      auto& [v, next] = call.back();
      if (next < adj[v].size()) {
        const std::size_t w = adj[v][next++];
        if (index[w] == -1) {
          index[w] = low[w] = counter++;
          stack.push_back(w);
          on_stack[w] = 1;
          call.emplace_back(w, 0);
        } else if (on_stack[w]) {
          low[v] = std::min(low[v], index[w]);
        }
        continue;
      }
      if (low[v] == index[v]) {
        std::size_t w;
        do {
          w = stack.back();
          stack.pop_back();
          on_stack[w] = 0;
          comp[w] = comps;
        } while (w != v);
        ++comps;
      }
      const std::size_t done = v;
      call.pop_back();
      if (!call.empty()) low[call.back().first] = std::min(low[call.back().first], low[done]);
    }
  }

  DCycle out;
  out.reflexive = d.reflexive;
  for (auto [x, y] : d.arcs) {
    if (comp[x] != comp[y]) continue;
    // Shortest path y -> x inside the component closes the cycle.
    std::vector<std::size_t> parent(n, n);
    std::vector<std::size_t> queue{y};
    parent[y] = y;
    for (std::size_t h = 0; h < queue.size() && parent[x] == n; ++h)
      for (auto w : adj[queue[h]])
        if (parent[w] == n && comp[w] == comp[x]) {
          parent[w] = queue[h];
          queue.push_back(w);
        }
    std::vector<std::size_t> path;
    for (std::size_t v = x; v != y; v = parent[v]) path.push_back(v);
    path.push_back(y);
    std::reverse(path.begin(), path.end());  // y ... x
    out.found = true;
    out.cycle.push_back(x);
    out.cycle.insert(out.cycle.end(), path.begin(), path.end() - 1);
    return out;
  }
  return out;
}

inline bool is_lower_bounded(const ImplicationalBase& base, const Limits& limits = {}) {
  return !has_d_cycle(base, limits).found;
}

// ---------------------------------------------------------------------------
// Carathéodory bound for biatomic atomistic systems

inline std::size_t log_bound(std::size_t n) {
  std::size_t k = 0;
  while ((std::size_t{1} << k) < n + 1) ++k;
  return k;
}

/// C <= ceil(log2(|U| + 1)), after confirming atomistic, biatomic and
/// independent minimal generators.
inline bool verify_log_bound(const ImplicationalBase& base, const Limits& limits = {}) {
  std::string missing;
  if (!check_atomistic(base)) missing += " atomistic";
  if (!check_biatomic(base, limits)) missing += " biatomic";
  if (!check_mingen_independence(base, limits)) missing += " independent-generators";
  if (!missing.empty()) throw Error(Errc::hypotheses_not_met, "not" + missing);
  return caratheodory_number(base, limits) <= log_bound(base.size());
}

// ---------------------------------------------------------------------------

struct AnalysisReport {
  CheckResult standard;
  CheckResult atomistic;
  std::optional<CheckResult> biatomic;
  std::optional<CheckResult> distributive;
  std::optional<CheckResult> modular;
  std::optional<CheckResult> mingen_independent;
  /// Unset when the base is not standard or too large.
  std::optional<bool> lower_bounded;
  std::vector<std::size_t> d_cycle;
  std::vector<std::size_t> d_reflexive;
  std::size_t caratheodory = 1;
  /// Unset when the bound's hypotheses fail.
  std::optional<bool> log_bound_holds;
  std::vector<std::string> notes;
};

inline AnalysisReport analyze(const ImplicationalBase& base, const Limits& limits = {}) {
  AnalysisReport r;
  r.standard = check_standard(base);
  r.atomistic = check_atomistic(base);
  r.caratheodory = caratheodory_number(base, limits);
  if (base.size() > limits.exhaustive) {
    r.notes.push_back("ground set above the exhaustive limit; lattice checks skipped");
    return r;
  }
  r.biatomic = check_biatomic(base, limits);
  r.distributive = check_distributive(base, limits);
  r.modular = check_modular(base, limits);
  try {
    r.mingen_independent = check_mingen_independence(base, limits);
  } catch (const Error& e) {
    if (e.code() != Errc::set_too_large) throw;
    r.notes.push_back("a minimal generator exceeds the independence-test bound");
  }
  if (r.standard) {
    const auto cycle = has_d_cycle(base, limits);
    r.lower_bounded = !cycle.found;
    r.d_cycle = cycle.cycle;
    r.d_reflexive = cycle.reflexive;
  } else {
    r.notes.push_back("not standard; arrow relations and D-cycles not evaluated");
  }
  if (r.atomistic && r.biatomic->holds && r.mingen_independent && r.mingen_independent->holds)
    r.log_bound_holds = r.caratheodory <= log_bound(base.size());
  return r;
}

}  // namespace mcc
