#pragma once

#include <istream>
#include <ostream>
#include <sstream>
#include <string>
#include <vector>

#include "mcc/core.hpp"
#include "mcc/generators.hpp"

namespace mcc {

// Instance text format, one directive per line, '#' starts a comment:
//
//   elements: 1 2 3 4 5
//   imp: 1 3 -> 2
//   edge: 3 4
//
// `elements:` lines may appear anywhere and accumulate.

namespace detail {
inline std::vector<std::string> tokens(const std::string& s) {
  std::istringstream in(s);
  std::vector<std::string> out;
  for (std::string t; in >> t;) out.push_back(t);
  return out;
}

inline std::string strip_comment(const std::string& line) {
  const auto hash = line.find('#');
  return hash == std::string::npos ? line : line.substr(0, hash);
}
}  // namespace detail

inline Instance parse_instance(std::istream& in, std::size_t max_elements = kMaxElements) {
  struct Directive {
    std::size_t line;
    std::string kind;
    std::vector<std::string> args;
  };
  std::vector<Directive> directives;
  std::vector<std::string> labels;
  std::string raw;
  for (std::size_t line_no = 1; std::getline(in, raw); ++line_no) {
    const std::string line = detail::strip_comment(raw);
    const auto colon = line.find(':');
    if (colon == std::string::npos) {
      if (!detail::tokens(line).empty()) throw ParseError(line_no, "expected '<directive>: ...'");
      continue;
    }
    const auto head = detail::tokens(line.substr(0, colon));
    if (head.size() != 1) throw ParseError(line_no, "malformed directive");
    auto args = detail::tokens(line.substr(colon + 1));
    if (head[0] == "elements") {
      labels.insert(labels.end(), args.begin(), args.end());
    } else if (head[0] == "imp" || head[0] == "edge") {
      directives.push_back({line_no, head[0], std::move(args)});
    } else {
      throw ParseError(line_no, "unknown directive '" + head[0] + "'");
    }
  }

  GroundSet ground;
  try {
    ground = GroundSet(labels, max_elements);
  } catch (const Error& e) {
    if (e.code() == Errc::ground_set_too_large) throw;
    throw ParseError(0, e.what());
  }

  auto lookup = [&](const Directive& d, const std::string& label) {
    auto idx = ground.index_of(label);
    if (!idx) throw ParseError(d.line, "unknown element '" + label + "'");
    return *idx;
  };

  std::vector<Implication> imps;
  std::vector<Edge> edges;
  for (const auto& d : directives) {
    if (d.kind == "edge") {
      if (d.args.size() != 2) throw ParseError(d.line, "edge needs exactly two elements");
      edges.emplace_back(lookup(d, d.args[0]), lookup(d, d.args[1]));
      continue;
    }
    Implication imp;
    bool arrow = false;
    for (const auto& t : d.args) {
      if (t == "->") {
        if (arrow) throw ParseError(d.line, "more than one '->'");
        arrow = true;
      } else {
        (arrow ? imp.conclusion : imp.premise).insert(lookup(d, t));
      }
    }
    if (!arrow) throw ParseError(d.line, "implication needs '->'");
    if (imp.conclusion.empty()) throw ParseError(d.line, "implication with empty conclusion");
    imps.push_back(imp);
  }
  ImplicationalBase base(ground, std::move(imps));
  return {std::move(base), ConsistencyGraph(std::move(ground), edges)};
}

inline Instance parse_instance(const std::string& text) {
  std::istringstream in(text);
  return parse_instance(in);
}

/// Elements in label order, space separated; the empty set prints as "{}".
inline std::string format_set(const GroundSet& ground, const ElemSet& s) {
  if (s.empty()) return "{}";
  std::string out;
  for (auto e : s) {
    if (!out.empty()) out += ' ';
    out += ground.label(e);
  }
  return out;
}

/// Inverse of format_set; also accepts comma separators.
inline ElemSet parse_set(const GroundSet& ground, std::string text) {
  for (auto& c : text)
    if (c == ',') c = ' ';
  ElemSet s;
  for (const auto& t : detail::tokens(text)) {
    if (t == "{}") continue;
    auto idx = ground.index_of(t);
    if (!idx) throw ParseError(1, "unknown element '" + t + "'");
    s.insert(*idx);
  }
  return s;
}

inline void write_sets(std::ostream& out, const GroundSet& ground, const std::vector<ElemSet>& sets) {
  for (const auto& s : sets) out << format_set(ground, s) << '\n';
}

inline std::vector<ElemSet> read_sets(std::istream& in, const GroundSet& ground) {
  std::vector<ElemSet> out;
  for (std::string line; std::getline(in, line);)
    if (!detail::tokens(line).empty()) out.push_back(parse_set(ground, line));
  return out;
}

inline void write_keys(std::ostream& out, const GroundSet& ground, const std::vector<ElemSet>& keys) {
  out << "keys: " << keys.size() << '\n';
  write_sets(out, ground, keys);
}

inline void write_instance(std::ostream& out, const ImplicationalBase& base, const ConsistencyGraph& graph) {
  const auto& g = base.ground();
  out << "elements:";
  for (const auto& l : g.labels()) out << ' ' << l;
  out << '\n';
  for (const auto& imp : base.implications()) {
    out << "imp:";
    for (auto e : imp.premise) out << ' ' << g.label(e);
    out << " ->";
    for (auto e : imp.conclusion) out << ' ' << g.label(e);
    out << '\n';
  }
  for (const auto& [u, v] : graph.edges()) out << "edge: " << g.label(u) << ' ' << g.label(v) << '\n';
}

inline std::string to_text(const ImplicationalBase& base, const ConsistencyGraph& graph) {
  std::ostringstream out;
  write_instance(out, base, graph);
  return out.str();
}

/// DIMACS-style positive 3-CNF: `c` comments, `p cnf <vars> <clauses>`,
/// clauses as 1-based positive literals terminated by 0.
inline CnfFormula parse_cnf(std::istream& in) {
  CnfFormula f;
  bool header = false;
  std::size_t declared = 0;
  std::vector<std::size_t> pending;
  std::string raw;
  std::size_t line_no = 0;
  while (std::getline(in, raw)) {
    ++line_no;
    const auto toks = detail::tokens(raw);
    if (toks.empty() || toks[0] == "c") continue;
    if (toks[0] == "p") {
      if (toks.size() != 4 || toks[1] != "cnf") throw ParseError(line_no, "expected 'p cnf <vars> <clauses>'");
      try {
        f.n_vars = std::stoul(toks[2]);
        declared = std::stoul(toks[3]);
      } catch (const std::exception&) {
        throw ParseError(line_no, "bad header counts");
      }
      header = true;
      continue;
    }
    if (!header) throw ParseError(line_no, "clause before 'p cnf' header");
    for (const auto& t : toks) {
      long lit;
      try {
        lit = std::stol(t);
      } catch (const std::exception&) {
        throw ParseError(line_no, "bad literal '" + t + "'");
      }
      if (lit < 0) throw ParseError(line_no, "only positive literals are accepted");
      if (lit == 0) {
        if (pending.size() != 3) throw ParseError(line_no, "clauses must have exactly three literals");
        f.clauses.push_back({pending[0], pending[1], pending[2]});
        pending.clear();
        continue;
      }
      if (static_cast<std::size_t>(lit) > f.n_vars) throw ParseError(line_no, "literal exceeds variable count");
      pending.push_back(static_cast<std::size_t>(lit - 1));
    }
  }
  if (!header) throw ParseError(line_no, "missing 'p cnf' header");
  if (!pending.empty()) throw ParseError(line_no, "unterminated clause");
  if (f.clauses.size() != declared) throw ParseError(line_no, "clause count differs from header");
  try {
    f.validate();
  } catch (const Error& e) {
    throw ParseError(line_no, e.what());
  }
  return f;
}

}  // namespace mcc
