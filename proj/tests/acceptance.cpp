// Acceptance suite: one PASS/FAIL line per criterion; exit status 1 if any fails.

#include <chrono>
#include <cstdio>
#include <functional>
#include <set>
#include <string>
#include <vector>

#include "fixtures.hpp"
#include "mcc/analysis.hpp"
#include "mcc/coatoms.hpp"
#include "mcc/generators.hpp"
#include "mcc/keys.hpp"
#include "mcc/mccenum.hpp"
#include "oracles.hpp"

using namespace mcc;
using mcc::fixtures::S;

namespace {

struct Outcome {
  bool ok = true;
  std::string detail;
};

void require(Outcome& o, bool cond, const std::string& what) {
  if (!cond && o.ok) {
    o.ok = false;
    o.detail = what;
  }
}

/// Instances whose keys criterion 8 decomposes.
std::vector<Instance> solved;

void remember(const Instance& inst) {
  if (!inst.graph.empty()) solved.push_back(inst);
}

Outcome five_element() {
  Outcome o;
  const auto inst = fixtures::five_element();
  const auto& g = inst.base.ground();
  const auto sol = solve(inst.base, inst.graph);
  const std::vector<ElemSet> expected{S(g, "1 2 3"), S(g, "3 5"), S(g, "1 4 5")};
  require(o, sol.complete && sol.sets == expected, "solutions differ from {123, 35, 145}");
  const auto keys = enumerate_keys(augment_with_inconsistency(inst.base, inst.graph)).keys;
  const std::set<ElemSet> expected_keys{S(g, "1 3 5"), S(g, "3 4"), S(g, "2 4"), S(g, "2 5")};
  require(o, std::set<ElemSet>(keys.begin(), keys.end()) == expected_keys && keys.size() == 4,
          "keys differ from {135, 34, 24, 25}");
  require(o, sol.keys == keys, "solve used different keys");
  remember(inst);
  return o;
}

Outcome random_vs_brute_force() {
  Outcome o;
  std::size_t count = 0;
  for (std::uint64_t seed = 0; count < 600; ++seed) {
    RandomParams p{1 + seed % 8, seed % 11, 1 + seed % 3, 1 + seed % 2, 0, seed};
    p.max_premise = std::min(p.max_premise, p.n);
    p.max_conclusion = std::min(p.max_conclusion, p.n);
    p.n_edges = std::min<std::size_t>(seed % 7, p.n * (p.n - 1) / 2);
    const auto inst = gen_random(p);
    const auto sol = solve(inst.base, inst.graph);
    require(o, sol.complete && sol.sets == brute_force_solve(inst.base, inst.graph).sets &&
                   sol.sets == oracle::solutions(inst.base, inst.graph),
            "seed " + std::to_string(seed) + " disagrees with brute force");
    remember(inst);
    ++count;
  }
  o.detail = o.ok ? std::to_string(count) + " instances" : o.detail;
  return o;
}

Outcome reduction_coatoms() {
  Outcome o;
  std::size_t count = 0;
  for (std::uint64_t seed = 0; count < 120; ++seed) {
    const std::size_t n = 1 + seed % 7;
    const auto y = gen_random({n, seed % 9, std::min<std::size_t>(3, n), std::min<std::size_t>(2, n), 0, seed}).base;
    const auto inst = gen_reduction(y);
    const std::size_t u = y.size(), v = u + 1;
    std::set<ElemSet> expected;
    for (const auto& c : oracle::coatoms(y)) {
      expected.insert(c.with(u));
      expected.insert(c.with(v));
    }
    const auto sol = solve(inst.base, inst.graph);
    require(o, sol.complete && std::set<ElemSet>(sol.sets.begin(), sol.sets.end()) == expected,
            "seed " + std::to_string(seed) + ": solutions are not the co-atoms plus u or v");
    const auto co = co_atoms(y);
    const auto brute = oracle::coatoms(y);
    require(o, std::set<ElemSet>(co.begin(), co.end()) == std::set<ElemSet>(brute.begin(), brute.end()),
            "seed " + std::to_string(seed) + ": co-atoms differ");
    remember(inst);
    ++count;
  }
  o.detail = o.ok ? std::to_string(count) + " bases" : o.detail;
  return o;
}

Outcome exponential_keys() {
  Outcome o;
  for (std::size_t n = 2; n <= 4; ++n) {
    const auto inst = gen_exponential(n);
    const auto sol = solve(inst.base, inst.graph);
    const std::set<ElemSet> keys(sol.keys.begin(), sol.keys.end());
    for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << n); ++mask) {
      ElemSet z;
      for (std::size_t i = 0; i < n; ++i) z.insert(mask >> i & 1u ? n + i : i);
      require(o, keys.count(z) == 1, "n=" + std::to_string(n) + ": a choice set is not a key");
    }
    const auto brute = oracle::keys(augment_with_inconsistency(inst.base, inst.graph));
    require(o, sol.keys.size() == brute.size() && sol.keys.size() == (std::size_t{1} << n) + 1,
            "n=" + std::to_string(n) + ": key count differs from brute force");
    remember(inst);
  }
  return o;
}

Outcome caratheodory_two() {
  Outcome o;
  for (std::uint64_t seed = 0; seed < 60; ++seed) {
    const auto base = gen_poset_convexity(gen_random_poset(1 + seed % 8, 0.15 * (1 + seed % 6), seed));
    require(o, caratheodory_number(base) <= 2, "poset seed " + std::to_string(seed) + " has C > 2");
  }
  for (std::uint64_t seed = 0; seed < 60; ++seed) {
    const auto base = gen_random({2 + seed % 7, 1 + seed % 8, 1, 2, 0, seed}).base;
    require(o, caratheodory_number(base) == 1, "singleton-premise seed " + std::to_string(seed) + " has C != 1");
  }
  return o;
}

Outcome cnf_lower_bounded() {
  Outcome o;
  for (std::uint64_t seed = 0; seed < 25; ++seed) {
    const std::size_t n = 3 + seed % 4, m = 1 + seed % 5;
    const auto base = gen_cnf_lower_bounded(gen_random_cnf(n, m, seed));
    const auto inst = gen_reduction(base);
    const std::string tag = "cnf seed " + std::to_string(seed);
    require(o, check_standard(base).holds && check_standard(inst.base).holds, tag + " not standard");
    require(o, !has_d_cycle(base).found, tag + " has a D-cycle");
    require(o, !has_d_cycle(inst.base).found, tag + " reduction has a D-cycle");
    for (const auto* b : {&base, &inst.base}) {
      const auto ar = arrow_relations(*b);
      for (std::size_t x = 0; x < n; ++x) {
        std::vector<ElemSet> ms;
        for (auto [e, m_idx] : ar.down)
          if (e == x) ms.push_back(ar.meet_irreducibles[m_idx].set);
        require(o, ms.size() == 1 && ms[0] == b->all().without(x), tag + ": x arrow is not unique");
      }
    }
    const auto sol = solve(inst.base, inst.graph);
    require(o, sol.complete && sol.sets == oracle::solutions(inst.base, inst.graph), tag + " wrong solutions");
  }
  return o;
}

Outcome projective_suite() {
  Outcome o;
  require(o, gen_fano().implications() == gen_projective_gf2(2).implications(), "Fano differs from dim 2");
  for (std::size_t dim : {2u, 3u}) {
    const auto base = gen_projective_gf2(dim);
    const std::string tag = "dim " + std::to_string(dim);
    require(o, check_standard(base).holds, tag + " not standard");
    require(o, check_atomistic(base).holds, tag + " not atomistic");
    require(o, check_biatomic(base).holds, tag + " not biatomic");
    require(o, check_modular(base).holds, tag + " not modular");
    require(o, !check_distributive(base).holds, tag + " unexpectedly distributive");
    require(o, check_mingen_independence(base).holds, tag + " minimal generators not independent");
    require(o, verify_log_bound(base), tag + " exceeds the log bound");
    const std::size_t c = caratheodory_number(base);
    require(o, c == dim + 1 && c <= log_bound(base.size()), tag + " Caratheodory number is not dim + 1");
    require(o, check_trace_property(base).holds, tag + " trace property fails");
    require(o, check_generator_deletion(base).holds, tag + " generator deletion fails");
    require(o, check_generator_subsets(base).holds, tag + " generator subsets fail");
    require(o, check_unique_minimum_subsets(base).holds, tag + " unique minimum subsets fail");
    const auto& g = base.ground();
    const std::string p1 = dim == 2 ? "001" : "0001", p2 = dim == 2 ? "010" : "0010",
                      p3 = dim == 2 ? "011" : "0011", p4 = dim == 2 ? "100" : "0100";
    require(o, !check_independent(base, S(g, p1 + " " + p2 + " " + p3)).holds, tag + " collinear set independent");
    require(o, check_independent(base, S(g, p1 + " " + p2 + " " + p4)).holds, tag + " basis not independent");
  }
  return o;
}

Outcome key_decompositions() {
  Outcome o;
  std::size_t keys = 0;
  for (const auto& inst : solved) {
    const auto sol = solve(inst.base, inst.graph);
    for (const auto& k : sol.keys) {
      try {
        const auto d = key_decomposition(inst.base, inst.graph, k);
        require(o, (d.gen_u | d.gen_v) == k, "decomposition does not cover the key");
      } catch (const Error&) {
        require(o, false, "a key has no decomposition");
      }
      ++keys;
    }
  }
  o.detail = o.ok ? std::to_string(keys) + " keys over " + std::to_string(solved.size()) + " instances" : o.detail;
  return o;
}

}  // namespace

int main() {
  struct Criterion {
    int id;
    const char* name;
    double budget_s;
    std::function<Outcome()> fn;
  };
  const std::vector<Criterion> criteria{
      {1, "five-element example solutions and keys", 1, five_element},
      {2, "random instances match brute force", 60, random_vs_brute_force},
      {3, "reduction yields co-atoms", 60, reduction_coatoms},
      {4, "exponential key family", 10, exponential_keys},
      {5, "Caratheodory number of convexities", 60, caratheodory_two},
      {6, "3-CNF construction is lower bounded", 60, cnf_lower_bounded},
      {7, "projective geometry property suite", 120, projective_suite},
      {8, "every key decomposes", 60, key_decompositions},
  };
  bool all = true;
  for (const auto& c : criteria) {
    const auto t0 = std::chrono::steady_clock::now();
    Outcome o;
    try {
      o = c.fn();
    } catch (const std::exception& e) {
      o = {false, std::string("exception: ") + e.what()};
    }
    const double s = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    if (o.ok && s > c.budget_s) o = {false, "over time budget"};
    all &= o.ok;
    std::printf("criterion %d %s: %s (%.3fs)%s%s\n", c.id, o.ok ? "PASS" : "FAIL", c.name, s,
                o.detail.empty() ? "" : " - ", o.detail.c_str());
    std::fflush(stdout);
  }
  return all ? 0 : 1;
}
