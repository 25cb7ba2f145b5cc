#include <gtest/gtest.h>

#include "fixtures.hpp"
#include "mcc/analysis.hpp"
#include "mcc/generators.hpp"
#include "oracles.hpp"

using namespace mcc;
using mcc::fixtures::S;

namespace {

/// Biatomicity straight from the definition over the oracle's closed sets.
bool biatomic_oracle(const ImplicationalBase& base) {
  const auto family = oracle::closed_sets(base);
  const ElemSet bottom = oracle::naive_close(base, ElemSet{});
  std::vector<ElemSet> atoms;
  for (const auto& f : family)
    if (f != bottom) {
      bool cover = true;
      for (const auto& h : family)
        if (bottom.proper_subset_of(h) && h.proper_subset_of(f)) cover = false;
      if (cover) atoms.push_back(f);
    }
  for (const auto& f1 : family)
    for (const auto& f2 : family) {
      if (f1 == bottom || f2 == bottom) continue;
      const ElemSet join = oracle::naive_close(base, f1 | f2);
      for (const auto& x : atoms) {
        if (!x.subset_of(join)) continue;
        bool ok = false;
        for (const auto& a : atoms)
          for (const auto& b : atoms)
            if (a.subset_of(f1) && b.subset_of(f2) && x.subset_of(oracle::naive_close(base, a | b))) ok = true;
        if (!ok) return false;
      }
    }
  return true;
}

ImplicationalBase chain3() {
  return gen_poset_convexity(Poset::from_relations(GroundSet({"a", "b", "c"}), {{0, 1}, {1, 2}}));
}

ImplicationalBase m3() { return fixtures::simple("elements: a b c\nimp: a b -> c\nimp: a c -> b\nimp: b c -> a\n").base; }

}  // namespace

TEST(Standard, Examples) {
  EXPECT_TRUE(check_standard(fixtures::five_element().base));
  EXPECT_TRUE(check_standard(fixtures::simple("elements: a b\n").base));
  const auto r = check_standard(fixtures::simple("elements: a b\nimp: -> a\n").base);
  EXPECT_FALSE(r);
  ASSERT_FALSE(r.witness.empty());
  EXPECT_EQ(r.witness[0], ElemSet{});
}

TEST(Standard, LowerSetMustBeClosed) {
  // cl(c) - c = ab is not closed.
  const auto base = fixtures::simple("elements: a b c\nimp: c -> a b\nimp: a b -> c\n").base;
  const auto r = check_standard(base);
  EXPECT_FALSE(r);
  ASSERT_FALSE(r.witness.empty());
  EXPECT_EQ(r.witness[0], S(base.ground(), "c"));
}

TEST(Atomistic, Examples) {
  EXPECT_TRUE(check_atomistic(fixtures::simple("elements: a b\n").base));
  const auto fig = fixtures::five_element().base;
  const auto r = check_atomistic(fig);
  EXPECT_FALSE(r);
  EXPECT_EQ(r.witness[0], S(fig.ground(), "4"));
  EXPECT_EQ(r.witness[1], S(fig.ground(), "1 4"));
  EXPECT_TRUE(check_atomistic(gen_fano()));
}

TEST(Biatomic, Examples) {
  EXPECT_TRUE(check_biatomic(fixtures::simple("elements: a b c\n").base));
  EXPECT_TRUE(check_biatomic(gen_fano()));
  EXPECT_TRUE(check_biatomic_point_form(gen_fano()));
  const auto chain = chain3();
  EXPECT_EQ(check_biatomic(chain).holds, biatomic_oracle(chain));
}

TEST(Biatomic, AgreesWithDefinitionOnRandomBases) {
  for (std::uint64_t seed = 0; seed < 150; ++seed) {
    const auto base = gen_random({2 + seed % 6, 1 + seed % 7, 2, 2, 0, seed}).base;
    const auto r = check_biatomic(base);
    ASSERT_EQ(r.holds, biatomic_oracle(base)) << "seed " << seed;
    if (!r) { EXPECT_EQ(r.witness.size(), 3u); }
  }
}

TEST(Distributive, Examples) {
  EXPECT_TRUE(check_distributive(fixtures::simple("elements: a b\nimp: a -> b\n").base));
  EXPECT_TRUE(check_distributive(fixtures::simple("elements: a b c\n").base));
  const auto fig = fixtures::five_element().base;
  const auto r = check_distributive(fig);
  EXPECT_FALSE(r);
  ASSERT_EQ(r.witness.size(), 2u);
  EXPECT_TRUE(is_closed(fig, r.witness[0]));
  EXPECT_TRUE(is_closed(fig, r.witness[1]));
  EXPECT_FALSE(is_closed(fig, r.witness[0] | r.witness[1]));
}

TEST(Modular, Examples) {
  EXPECT_TRUE(check_modular(fixtures::simple("elements: a b c\n").base));
  EXPECT_TRUE(check_modular(gen_fano()));
  const auto pentagon = fixtures::simple("elements: a b c\nimp: a b -> a b c\nimp: c -> a\n").base;
  const auto r = check_modular(pentagon);
  EXPECT_FALSE(r);
  ASSERT_EQ(r.witness.size(), 3u);
  const auto &f1 = r.witness[0], &f2 = r.witness[1], &f3 = r.witness[2];
  EXPECT_TRUE(f1.subset_of(f2));
  EXPECT_NE(close(pentagon, f1 | (f2 & f3)), close(pentagon, f1 | f3) & f2);
}

TEST(Modular, AgreesWithDefinitionOnRandomBases) {
  for (std::uint64_t seed = 0; seed < 120; ++seed) {
    const auto base = gen_random({2 + seed % 6, 1 + seed % 7, 2, 2, 0, seed}).base;
    const auto family = oracle::closed_sets(base);
    bool modular = true, distributive = true;
    for (const auto& a : family)
      for (const auto& b : family) {
        if (oracle::naive_close(base, a | b) != (a | b)) distributive = false;
        if (!a.subset_of(b)) continue;
        for (const auto& c : family)
          if (oracle::naive_close(base, a | (b & c)) != (oracle::naive_close(base, a | c) & b)) modular = false;
      }
    ASSERT_EQ(check_modular(base).holds, modular) << "seed " << seed;
    ASSERT_EQ(check_distributive(base).holds, distributive) << "seed " << seed;
  }
}

TEST(Hierarchy, DistributiveModularBiatomicChain) {
  for (std::uint64_t seed = 0; seed < 200; ++seed) {
    const auto base = gen_random({2 + seed % 7, 1 + seed % 8, 1 + seed % 2, 2, 0, seed}).base;
    const bool distributive = check_distributive(base).holds;
    const bool modular = check_modular(base).holds;
    if (distributive) { EXPECT_TRUE(modular) << "seed " << seed; }
    if (modular && check_atomistic(base)) { EXPECT_TRUE(check_biatomic(base)) << "seed " << seed; }
  }
}

TEST(Independent, Examples) {
  const auto fano = gen_fano();
  const auto& g = fano.ground();
  EXPECT_TRUE(check_independent(fano, ElemSet{}));
  EXPECT_TRUE(check_independent(fano, S(g, "001")));
  // 001 + 010 = 011: a line.
  const auto line = check_independent(fano, S(g, "001 010 011"));
  EXPECT_FALSE(line);
  EXPECT_EQ(line.witness.size(), 2u);
  EXPECT_FALSE(independence_chain_condition(fano, S(g, "001 010 011")));
  const ElemSet basis = S(g, "001 010 100");
  EXPECT_TRUE(check_independent(fano, basis));
  EXPECT_TRUE(independence_chain_condition(fano, basis));
}

TEST(Independent, RejectsLargeSets) {
  const auto base = fixtures::simple("elements: a b c d\n").base;
  Limits small;
  small.independence_set = 3;
  try {
    check_independent(base, base.all(), small);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), Errc::set_too_large);
  }
}

TEST(Independent, ChainConditionAgreesOnModularSystems) {
  std::vector<ImplicationalBase> modular{gen_fano(), fixtures::simple("elements: a b c d\nimp: a -> b\n").base};
  for (std::uint64_t seed = 0; seed < 60; ++seed) {
    auto base = gen_random({3 + seed % 5, 1 + seed % 6, 1, 2, 0, seed}).base;  // singleton premises: distributive
    if (check_modular(base)) modular.push_back(std::move(base));
  }
  for (const auto& base : modular) {
    ASSERT_TRUE(check_modular(base));
    for (const auto& a : oracle::powerset(base.size())) {
      if (a.size() > 4) continue;
      EXPECT_EQ(check_independent(base, a).holds, independence_chain_condition(base, a));
    }
  }
}

TEST(MingenIndependence, Examples) {
  EXPECT_TRUE(check_mingen_independence(gen_fano()));
  // Atomistic with Carathéodory number 2.
  const auto chain = chain3();
  ASSERT_TRUE(check_atomistic(chain));
  ASSERT_EQ(caratheodory_number(chain), 2u);
  EXPECT_TRUE(check_mingen_independence(chain));
  const auto ex2 = gen_exponential(2).base;
  EXPECT_FALSE(check_atomistic(ex2));
  const auto r = analyze(ex2);
  EXPECT_FALSE(r.log_bound_holds.has_value());
}

TEST(ArrowRelations, Chain) {
  const auto base = fixtures::simple("elements: a b\nimp: a -> b\n").base;
  const auto& g = base.ground();
  const auto ar = arrow_relations(base);
  std::size_t m = ar.meet_irreducibles.size();
  for (std::size_t i = 0; i < ar.meet_irreducibles.size(); ++i)
    if (ar.meet_irreducibles[i].set == S(g, "b")) m = i;
  ASSERT_LT(m, ar.meet_irreducibles.size());
  EXPECT_EQ(ar.meet_irreducibles[m].cover, S(g, "a b"));
  const std::size_t a = 0;
  EXPECT_NE(std::find(ar.down.begin(), ar.down.end(), std::make_pair(a, m)), ar.down.end());
  EXPECT_NE(std::find(ar.up.begin(), ar.up.end(), std::make_pair(m, a)), ar.up.end());
}

TEST(ArrowRelations, BooleanLattice) {
  const auto base = fixtures::simple("elements: a b\n").base;
  const auto ar = arrow_relations(base);
  for (auto [x, m] : ar.down) EXPECT_EQ(ar.meet_irreducibles[m].set, ElemSet::singleton(x).complement(2));
  EXPECT_EQ(ar.down.size(), 2u);
}

TEST(ArrowRelations, InvariantsOnRandomStandardBases) {
  for (std::uint64_t seed = 0; seed < 100; ++seed) {
    const auto base = gen_random({2 + seed % 7, 1 + seed % 8, 2, 2, 0, seed}).base;
    if (!check_standard(base)) continue;
    const auto ar = arrow_relations(base);
    for (auto [x, m] : ar.down) {
      EXPECT_FALSE(ar.meet_irreducibles[m].set.contains(x));
      EXPECT_TRUE(ar.meet_irreducibles[m].cover.contains(x));
    }
    for (auto [m, x] : ar.up) {
      EXPECT_FALSE(ar.meet_irreducibles[m].set.contains(x));
      EXPECT_TRUE(oracle::naive_close(base, ElemSet{x}).without(x).subset_of(ar.meet_irreducibles[m].set));
    }
  }
}

TEST(ArrowRelations, RefuseNonStandard) {
  try {
    arrow_relations(fixtures::simple("elements: a b\nimp: -> a\n").base);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), Errc::not_standard);
  }
}

TEST(DRelation, EmptyBaseHasNoArcs) {
  const auto base = fixtures::simple("elements: a b c\n").base;
  const auto d = d_relation(base);
  EXPECT_TRUE(d.arcs.empty());
  EXPECT_EQ(d.reflexive.size(), 3u);  // every x has a double arrow
  EXPECT_FALSE(has_d_cycle(base).found);
}

TEST(DRelation, DiamondHasACycle) {
  const auto base = m3();
  const auto c = has_d_cycle(base);
  ASSERT_TRUE(c.found);
  ASSERT_GE(c.cycle.size(), 2u);
  const auto d = d_relation(base);
  for (std::size_t i = 0; i < c.cycle.size(); ++i) {
    const auto arc = std::make_pair(c.cycle[i], c.cycle[(i + 1) % c.cycle.size()]);
    EXPECT_NE(std::find(d.arcs.begin(), d.arcs.end(), arc), d.arcs.end());
  }
  EXPECT_FALSE(is_lower_bounded(base));
}

TEST(DRelation, CnfConstructionIsLowerBounded) {
  CnfFormula f{4, {{0, 1, 2}, {0, 1, 3}}};
  const auto base = gen_cnf_lower_bounded(f);
  EXPECT_TRUE(check_standard(base));
  EXPECT_FALSE(has_d_cycle(base).found);
  EXPECT_FALSE(has_d_cycle(gen_reduction(base).base).found);
}

TEST(DRelation, CnfArrowFacts) {
  CnfFormula f{4, {{0, 1, 2}, {0, 1, 3}}};
  const auto base = gen_reduction(gen_cnf_lower_bounded(f)).base;
  const auto ar = arrow_relations(base);
  for (std::size_t x = 0; x < 4; ++x) {
    std::vector<ElemSet> ms;
    for (auto [e, m] : ar.down)
      if (e == x) ms.push_back(ar.meet_irreducibles[m].set);
    ASSERT_EQ(ms.size(), 1u);
    EXPECT_EQ(ms[0], base.all().without(x));
  }
}

TEST(LogBound, Examples) {
  EXPECT_TRUE(verify_log_bound(gen_fano()));
  EXPECT_EQ(log_bound(7), 3u);
  EXPECT_EQ(log_bound(1), 1u);
  EXPECT_TRUE(verify_log_bound(fixtures::simple("elements: a\n").base));
  try {
    verify_log_bound(gen_exponential(2).base);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), Errc::hypotheses_not_met);
    EXPECT_NE(std::string(e.what()).find("atomistic"), std::string::npos);
  }
}

TEST(GeneratorStructure, HoldOnProjectiveGeometries) {
  for (const auto& base : {gen_fano(), gen_projective_gf2(3)}) {
    EXPECT_TRUE(check_trace_property(base));
    EXPECT_TRUE(check_generator_deletion(base));
    EXPECT_TRUE(check_generator_subsets(base));
    EXPECT_TRUE(check_unique_minimum_subsets(base));
  }
}

TEST(GeneratorStructure, HoldOnBiatomicAtomisticRandomConvexities) {
  int tested = 0;
  for (std::uint64_t seed = 0; seed < 60; ++seed) {
    const auto base = gen_poset_convexity(gen_random_poset(3 + seed % 5, 0.4, seed));
    if (!check_atomistic(base) || !check_biatomic(base)) continue;
    ++tested;
    EXPECT_TRUE(check_trace_property(base));
    EXPECT_TRUE(check_generator_deletion(base)) << "seed " << seed;
    EXPECT_TRUE(check_generator_subsets(base)) << "seed " << seed;
    if (check_mingen_independence(base)) { EXPECT_TRUE(check_unique_minimum_subsets(base)) << "seed " << seed; }
  }
  EXPECT_GT(tested, 0);
}

TEST(GeneratorStructure, FailuresCarryWitnesses) {
  int failures = 0;
  for (std::uint64_t seed = 0; seed < 80; ++seed) {
    const auto base = gen_random({3 + seed % 5, 2 + seed % 6, 2, 2, 0, seed}).base;
    for (const auto& r : {check_trace_property(base), check_generator_deletion(base), check_generator_subsets(base),
                          check_unique_minimum_subsets(base)}) {
      if (r) continue;
      ++failures;
      EXPECT_FALSE(r.witness.empty());
      EXPECT_FALSE(r.detail.empty());
    }
  }
  EXPECT_GT(failures, 0);
}

TEST(Analyze, FiveElementReport) {
  const auto r = analyze(fixtures::five_element().base);
  EXPECT_TRUE(r.standard);
  EXPECT_FALSE(r.atomistic);
  ASSERT_TRUE(r.distributive.has_value());
  EXPECT_FALSE(*r.distributive);
  EXPECT_EQ(r.caratheodory, 2u);
  ASSERT_TRUE(r.lower_bounded.has_value());
  EXPECT_FALSE(r.log_bound_holds.has_value());
}

TEST(Analyze, NonStandardSkipsArrows) {
  const auto r = analyze(fixtures::simple("elements: a b\nimp: -> a\n").base);
  EXPECT_FALSE(r.standard);
  EXPECT_FALSE(r.lower_bounded.has_value());
}
