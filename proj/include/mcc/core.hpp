#pragma once

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

#include "mcc/elemset.hpp"
#include "mcc/error.hpp"

namespace mcc {

/// Resource caps shared by the enumeration routines.
struct Limits {
  /// Largest ground set on which exhaustive (2^n) procedures run.
  std::size_t exhaustive = 20;
  std::size_t key_cap = 1'000'000;
  std::size_t mis_cap = 1'000'000;
  /// Largest generator size explored; 0 means |U|.
  std::size_t mingen_size = 0;
  /// Largest set handed to the subset-pair independence test.
  std::size_t independence_set = 15;
};

/// A cap was hit. Carries the phase that stopped and whatever it had
/// produced so far; the partial list is never a complete answer.
class OutputLimitExceeded : public Error {
 public:
  OutputLimitExceeded(std::string phase, std::size_t cap, std::vector<ElemSet> partial)
      : Error(Errc::output_limit_exceeded, phase + " output exceeds cap " + std::to_string(cap)),
        phase_(std::move(phase)),
        partial_(std::move(partial)) {}

  const std::string& phase() const noexcept { return phase_; }
  const std::vector<ElemSet>& partial() const noexcept { return partial_; }

 private:
  std::string phase_;
  std::vector<ElemSet> partial_;
};

/// Ordered, duplicate-free element labels. Elements are addressed by their
/// position in `labels()`.
class GroundSet {
 public:
  GroundSet() = default;

  explicit GroundSet(std::vector<std::string> labels, std::size_t max_size = kMaxElements)
      : labels_(std::move(labels)) {
    if (max_size > kMaxElements) max_size = kMaxElements;
    if (labels_.size() > max_size)
      throw Error(Errc::ground_set_too_large, std::to_string(labels_.size()) +
                                                  " elements exceed the limit of " +
                                                  std::to_string(max_size));
    index_.reserve(labels_.size());
    for (std::size_t i = 0; i < labels_.size(); ++i) {
      if (labels_[i].empty()) throw Error(Errc::invalid_instance, "empty element label");
      if (!index_.emplace(labels_[i], i).second)
        throw Error(Errc::invalid_instance, "duplicate element label '" + labels_[i] + "'");
    }
  }

  std::size_t size() const { return labels_.size(); }
  const std::vector<std::string>& labels() const { return labels_; }
  const std::string& label(std::size_t i) const { return labels_.at(i); }

  std::optional<std::size_t> index_of(const std::string& label) const {
    auto it = index_.find(label);
    if (it == index_.end()) return std::nullopt;
    return it->second;
  }

  ElemSet all() const { return ElemSet::full(size()); }

  friend bool operator==(const GroundSet& a, const GroundSet& b) { return a.labels_ == b.labels_; }

 private:
  std::vector<std::string> labels_;
  std::unordered_map<std::string, std::size_t> index_;
};

struct Implication {
  ElemSet premise;
  ElemSet conclusion;

  friend bool operator==(const Implication&, const Implication&) = default;
};

/// Ground set plus a duplicate-free list of implications, with the
/// occurrence index used by forward chaining. Immutable after construction.
class ImplicationalBase {
 public:
  ImplicationalBase() = default;

  ImplicationalBase(GroundSet ground, std::vector<Implication> implications)
      : ground_(std::move(ground)) {
    const ElemSet all = ground_.all();
    for (auto& imp : implications) {
      if (!imp.premise.subset_of(all) || !imp.conclusion.subset_of(all))
        throw Error(Errc::invalid_instance, "implication refers to elements outside the ground set");
      if (imp.conclusion.empty())
        throw Error(Errc::invalid_instance, "implication with empty conclusion");
      if (std::find(imps_.begin(), imps_.end(), imp) != imps_.end()) {
        ++duplicates_removed_;
        continue;
      }
      imps_.push_back(imp);
    }
    occurrences_.assign(ground_.size(), {});
    premise_sizes_.reserve(imps_.size());
    for (std::size_t r = 0; r < imps_.size(); ++r) {
      premise_sizes_.push_back(static_cast<std::uint32_t>(imps_[r].premise.size()));
      if (imps_[r].premise.empty()) empty_premise_rules_.push_back(r);
      for (auto e : imps_[r].premise) occurrences_[e].push_back(static_cast<std::uint32_t>(r));
    }
  }

  const GroundSet& ground() const { return ground_; }
  std::size_t size() const { return ground_.size(); }
  ElemSet all() const { return ground_.all(); }
  const std::vector<Implication>& implications() const { return imps_; }
  std::size_t duplicates_removed() const { return duplicates_removed_; }
  const std::vector<std::size_t>& empty_premise_rules() const { return empty_premise_rules_; }

  /// Implications (by index) whose premise mentions element `e`.
  const std::vector<std::uint32_t>& occurrences(std::size_t e) const { return occurrences_[e]; }
  const std::vector<std::uint32_t>& premise_sizes() const { return premise_sizes_; }

 private:
  GroundSet ground_;
  std::vector<Implication> imps_;
  std::vector<std::vector<std::uint32_t>> occurrences_;
  std::vector<std::uint32_t> premise_sizes_;
  std::vector<std::size_t> empty_premise_rules_;
  std::size_t duplicates_removed_ = 0;
};

using Edge = std::pair<std::size_t, std::size_t>;

/// Inconsistent pairs. Pairs are stored as (smaller, larger), sorted and
/// unique; self-loops given at construction are dropped and remembered.
class ConsistencyGraph {
 public:
  ConsistencyGraph() = default;

  ConsistencyGraph(GroundSet ground, const std::vector<Edge>& edges) : ground_(std::move(ground)) {
    for (auto [u, v] : edges) {
      if (u >= ground_.size() || v >= ground_.size())
        throw Error(Errc::invalid_instance, "edge refers to elements outside the ground set");
      if (u == v) {
        self_loops_.push_back(u);
        continue;
      }
      edges_.emplace_back(std::min(u, v), std::max(u, v));
    }
    std::sort(edges_.begin(), edges_.end());
    edges_.erase(std::unique(edges_.begin(), edges_.end()), edges_.end());
  }

  const GroundSet& ground() const { return ground_; }
  const std::vector<Edge>& edges() const { return edges_; }
  const std::vector<std::size_t>& self_loops() const { return self_loops_; }
  bool empty() const { return edges_.empty(); }

  static ElemSet pair_set(const Edge& e) {
    ElemSet s;
    s.insert(e.first);
    s.insert(e.second);
    return s;
  }

  bool is_consistent(const ElemSet& y) const {
    for (const auto& e : edges_)
      if (y.contains(e.first) && y.contains(e.second)) return false;
    return true;
  }

 private:
  GroundSet ground_;
  std::vector<Edge> edges_;
  std::vector<std::size_t> self_loops_;
};

struct Instance {
  ImplicationalBase base;
  ConsistencyGraph graph;
};

struct ValidationReport {
  bool valid = true;
  std::size_t elements = 0;
  std::size_t implications = 0;
  std::size_t edges = 0;
  std::size_t duplicates_removed = 0;
  std::vector<std::string> self_loops;
  std::vector<std::size_t> empty_premise_rules;
  /// No edges: the whole ground set is the only solution.
  bool trivial = false;
};

/// Structural report on an instance. Throws MismatchedGroundSets when the
/// two inputs do not share a label list.
inline ValidationReport validate_instance(const ImplicationalBase& base, const ConsistencyGraph& graph) {
  if (!(base.ground() == graph.ground())) {
    std::string diff;
    const auto& a = base.ground().labels();
    const auto& b = graph.ground().labels();
    for (const auto& l : a)
      if (!graph.ground().index_of(l)) diff += " -" + l;
    for (const auto& l : b)
      if (!base.ground().index_of(l)) diff += " +" + l;
    if (diff.empty()) diff = " (same labels, different order)";
    throw Error(Errc::mismatched_ground_sets, "graph labels differ from base labels:" + diff);
  }
  ValidationReport r;
  r.elements = base.size();
  r.implications = base.implications().size();
  r.edges = graph.edges().size();
  r.duplicates_removed = base.duplicates_removed();
  for (auto s : graph.self_loops()) r.self_loops.push_back(graph.ground().label(s));
  r.empty_premise_rules = base.empty_premise_rules();
  r.trivial = graph.empty();
  r.valid = r.self_loops.empty();
  return r;
}

}  // namespace mcc
