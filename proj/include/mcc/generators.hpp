#pragma once

#include <array>
#include <cstddef>
#include <cstdint>
#include <random>
#include <string>
#include <vector>

#include "mcc/core.hpp"

namespace mcc {

// ---------------------------------------------------------------------------
// Randomness

/// Seeded source with a portable bounded draw (std distributions differ
/// between standard libraries, which would break seed reproducibility).
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : engine_(seed) {}

  /// Uniform in [0, bound).
  std::size_t below(std::size_t bound) {
    const std::uint64_t b = bound;
    const std::uint64_t limit = UINT64_MAX - UINT64_MAX % b;
    std::uint64_t v;
    do v = engine_();
    while (v >= limit);
    return static_cast<std::size_t>(v % b);
  }

  /// Uniform in [lo, hi].
  std::size_t between(std::size_t lo, std::size_t hi) { return lo + below(hi - lo + 1); }

  bool chance(double p) { return static_cast<double>(engine_() >> 11) * 0x1.0p-53 < p; }

  /// Uniform k-subset of {0, ..., n-1}.
  ElemSet subset(std::size_t n, std::size_t k) {
    std::vector<std::size_t> pool(n);
    for (std::size_t i = 0; i < n; ++i) pool[i] = i;
    ElemSet s;
    for (std::size_t i = 0; i < k; ++i) {
      std::swap(pool[i], pool[i + below(n - i)]);
      s.insert(pool[i]);
    }
    return s;
  }

 private:
  std::mt19937_64 engine_;
};

inline std::vector<std::string> numbered_labels(const std::string& prefix, std::size_t n, std::size_t first = 1) {
  std::vector<std::string> out;
  out.reserve(n);
  for (std::size_t i = 0; i < n; ++i) out.push_back(prefix + std::to_string(first + i));
  return out;
}

// ---------------------------------------------------------------------------
// Hardness reduction

/// U = Y + {u, v}, base = baseY + {Y -> uv}, one inconsistent pair uv. The
/// labels u and v get primes appended until they are fresh.
inline Instance gen_reduction(const ImplicationalBase& base_y) {
  std::vector<std::string> labels = base_y.ground().labels();
  auto fresh = [&](std::string name) {
    while (base_y.ground().index_of(name)) name += "'";
    return name;
  };
  const std::size_t u = labels.size();
  const std::size_t v = u + 1;
  labels.push_back(fresh("u"));
  labels.push_back(fresh("v"));
  GroundSet ground(std::move(labels));
  std::vector<Implication> imps = base_y.implications();
  imps.push_back({base_y.all(), ElemSet{u, v}});
  ImplicationalBase base(ground, std::move(imps));
  return {std::move(base), ConsistencyGraph(std::move(ground), {{u, v}})};
}

/// Positive 3-CNF: every clause names three distinct variables.
struct CnfFormula {
  std::size_t n_vars = 0;
  std::vector<std::array<std::size_t, 3>> clauses;

  void validate() const {
    for (const auto& c : clauses) {
      for (auto v : c)
        if (v >= n_vars) throw Error(Errc::invalid_params, "clause variable out of range");
      if (c[0] == c[1] || c[0] == c[2] || c[1] == c[2])
        throw Error(Errc::invalid_params, "clause literals must be distinct");
    }
  }
};

/// Ground set x1..xn, y1..ym, z with
///   xa xb -> z     for each clause i and each pair of its variables,
///   yi -> z        for each clause i,
///   xa z -> yi     for each variable a of clause i.
inline ImplicationalBase gen_cnf_lower_bounded(const CnfFormula& cnf) {
  cnf.validate();
  const std::size_t n = cnf.n_vars;
  const std::size_t m = cnf.clauses.size();
  auto labels = numbered_labels("x", n);
  for (auto& l : numbered_labels("y", m)) labels.push_back(std::move(l));
  labels.push_back("z");
  const std::size_t z = n + m;

  std::vector<Implication> imps;
  for (std::size_t i = 0; i < m; ++i) {
    const auto& c = cnf.clauses[i];
    for (std::size_t a = 0; a < 3; ++a)
      for (std::size_t b = a + 1; b < 3; ++b) imps.push_back({ElemSet{c[a], c[b]}, ElemSet{z}});
  }
  for (std::size_t i = 0; i < m; ++i) imps.push_back({ElemSet{n + i}, ElemSet{z}});
  for (std::size_t i = 0; i < m; ++i)
    for (auto x : cnf.clauses[i]) imps.push_back({ElemSet{x, z}, ElemSet{n + i}});
  return ImplicationalBase(GroundSet(std::move(labels)), std::move(imps));
}

inline CnfFormula gen_random_cnf(std::size_t n_vars, std::size_t n_clauses, std::uint64_t seed) {
  if (n_vars < 3) throw Error(Errc::invalid_params, "a 3-CNF needs at least three variables");
  Rng rng(seed);
  CnfFormula f{n_vars, {}};
  for (std::size_t i = 0; i < n_clauses; ++i) {
    const auto vars = rng.subset(n_vars, 3).to_vector();
    f.clauses.push_back({vars[0], vars[1], vars[2]});
  }
  return f;
}

// ---------------------------------------------------------------------------
// Exponential key family

/// x_i -> y_i for each i, y1..yn -> uv, inconsistent pair uv.
inline Instance gen_exponential(std::size_t n) {
  if (n < 1) throw Error(Errc::invalid_params, "n must be at least 1");
  auto labels = numbered_labels("x", n);
  for (auto& l : numbered_labels("y", n)) labels.push_back(std::move(l));
  labels.push_back("u");
  labels.push_back("v");
  const std::size_t u = 2 * n, v = 2 * n + 1;
  GroundSet ground(std::move(labels));
  std::vector<Implication> imps;
  ElemSet ys;
  for (std::size_t i = 0; i < n; ++i) {
    imps.push_back({ElemSet{i}, ElemSet{n + i}});
    ys.insert(n + i);
  }
  imps.push_back({ys, ElemSet{u, v}});
  ImplicationalBase base(ground, std::move(imps));
  return {std::move(base), ConsistencyGraph(std::move(ground), {{u, v}})};
}

// ---------------------------------------------------------------------------
// Posets and convexity

/// Finite partial order; `up(x)` holds every y with x <= y.
class Poset {
 public:
  /// `leq[x][y]` true iff x <= y. Partial-order axioms are verified.
  Poset(GroundSet elements, const std::vector<std::vector<bool>>& leq) : elements_(std::move(elements)) {
    const std::size_t n = elements_.size();
    if (leq.size() != n) throw Error(Errc::invalid_params, "order matrix has the wrong size");
    up_.assign(n, {});
    for (std::size_t x = 0; x < n; ++x) {
      if (leq[x].size() != n) throw Error(Errc::invalid_params, "order matrix has the wrong size");
      for (std::size_t y = 0; y < n; ++y)
        if (leq[x][y]) up_[x].insert(y);
    }
    for (std::size_t x = 0; x < n; ++x) {
      if (!up_[x].contains(x)) throw Error(Errc::invalid_params, "order is not reflexive");
      for (auto y : up_[x]) {
        if (y != x && up_[y].contains(x)) throw Error(Errc::invalid_params, "order is not antisymmetric");
        if (!up_[y].subset_of(up_[x])) throw Error(Errc::invalid_params, "order is not transitive");
      }
    }
  }

  /// Reflexive-transitive closure of the given strict relations.
  static Poset from_relations(GroundSet elements, const std::vector<Edge>& less) {
    const std::size_t n = elements.size();
    std::vector<std::vector<bool>> leq(n, std::vector<bool>(n, false));
    for (std::size_t x = 0; x < n; ++x) leq[x][x] = true;
    for (auto [a, b] : less) leq.at(a).at(b) = true;
    for (std::size_t k = 0; k < n; ++k)
      for (std::size_t i = 0; i < n; ++i)
        if (leq[i][k])
          for (std::size_t j = 0; j < n; ++j)
            if (leq[k][j]) leq[i][j] = true;
    return Poset(std::move(elements), leq);
  }

  const GroundSet& elements() const { return elements_; }
  std::size_t size() const { return elements_.size(); }
  bool leq(std::size_t x, std::size_t y) const { return up_[x].contains(y); }
  bool less(std::size_t x, std::size_t y) const { return x != y && leq(x, y); }

  bool is_convex(const ElemSet& s) const {
    for (auto x : s)
      for (auto z : s)
        for (std::size_t y = 0; y < size(); ++y)
          if (!s.contains(y) && leq(x, y) && leq(y, z)) return false;
    return true;
  }

 private:
  GroundSet elements_;
  std::vector<ElemSet> up_;
};

/// Random order on n elements: each pair i < j is related with probability
/// `density` before transitive closure.
inline Poset gen_random_poset(std::size_t n, double density, std::uint64_t seed) {
  Rng rng(seed);
  std::vector<Edge> less;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j)
      if (rng.chance(density)) less.emplace_back(i, j);
  return Poset::from_relations(GroundSet(numbered_labels("p", n)), less);
}

/// xz -> y for every x < y < z; closed sets are the convex subsets.
inline ImplicationalBase gen_poset_convexity(const Poset& poset) {
  std::vector<Implication> imps;
  const std::size_t n = poset.size();
  for (std::size_t x = 0; x < n; ++x)
    for (std::size_t z = 0; z < n; ++z) {
      if (!poset.less(x, z)) continue;
      for (std::size_t y = 0; y < n; ++y)
        if (poset.less(x, y) && poset.less(y, z)) imps.push_back({ElemSet{x, z}, ElemSet{y}});
    }
  return ImplicationalBase(poset.elements(), std::move(imps));
}

// ---------------------------------------------------------------------------
// Projective geometries over GF(2)

/// Points are the nonzero vectors of GF(2)^(dim+1), labelled by their bit
/// string; pq -> p+q for every pair of distinct points. Closed sets are the
/// subspaces.
inline ImplicationalBase gen_projective_gf2(std::size_t dim) {
  if (dim != 2 && dim != 3) throw Error(Errc::invalid_params, "dimension must be 2 or 3");
  const std::size_t width = dim + 1;
  const std::size_t points = (std::size_t{1} << width) - 1;
  std::vector<std::string> labels;
  for (std::size_t p = 1; p <= points; ++p) {
    std::string s;
    for (std::size_t b = width; b-- > 0;) s += (p >> b & 1u) ? '1' : '0';
    labels.push_back(s);
  }
  std::vector<Implication> imps;
  for (std::size_t p = 1; p <= points; ++p)
    for (std::size_t q = p + 1; q <= points; ++q) imps.push_back({ElemSet{p - 1, q - 1}, ElemSet{(p ^ q) - 1}});
  return ImplicationalBase(GroundSet(std::move(labels)), std::move(imps));
}

/// The Fano plane.
inline ImplicationalBase gen_fano() { return gen_projective_gf2(2); }

// ---------------------------------------------------------------------------
// Random instances

struct RandomParams {
  std::size_t n = 8;
  std::size_t n_imps = 6;
  std::size_t max_premise = 2;
  std::size_t max_conclusion = 1;
  std::size_t n_edges = 3;
  std::uint64_t seed = 0;
};

/// Premises and conclusions are uniform subsets of uniform size; an
/// implication whose conclusion lies inside its premise is discarded and
/// redrawn. Edges are uniform over distinct pairs.
inline Instance gen_random(const RandomParams& p) {
  if (p.n < 1 || p.n > kMaxElements) throw Error(Errc::invalid_params, "n must be in [1, 128]");
  if (p.max_premise < 1 || p.max_premise > p.n) throw Error(Errc::invalid_params, "max_premise must be in [1, n]");
  if (p.max_conclusion < 1 || p.max_conclusion > p.n)
    throw Error(Errc::invalid_params, "max_conclusion must be in [1, n]");
  if (p.n_edges > p.n * (p.n - 1) / 2) throw Error(Errc::invalid_params, "more edges than pairs");
  if (p.n_imps > 10'000) throw Error(Errc::invalid_params, "too many implications");

  Rng rng(p.seed);
  GroundSet ground(numbered_labels("", p.n));
  std::vector<Implication> imps;
  for (std::size_t attempts = 0; imps.size() < p.n_imps && attempts < 100 * (p.n_imps + 1); ++attempts) {
    Implication imp{rng.subset(p.n, rng.between(1, p.max_premise)),
                    rng.subset(p.n, rng.between(1, p.max_conclusion))};
    if (imp.conclusion.subset_of(imp.premise)) continue;
    imps.push_back(imp);
  }

  std::vector<Edge> pairs;
  for (std::size_t a = 0; a < p.n; ++a)
    for (std::size_t b = a + 1; b < p.n; ++b) pairs.emplace_back(a, b);
  std::vector<Edge> edges;
  for (std::size_t i = 0; i < p.n_edges; ++i) {
    std::swap(pairs[i], pairs[i + rng.below(pairs.size() - i)]);
    edges.push_back(pairs[i]);
  }
  ImplicationalBase base(ground, std::move(imps));
  return {std::move(base), ConsistencyGraph(std::move(ground), edges)};
}

}  // namespace mcc
