#pragma once

#include <chrono>
#include <cstdint>
#include <fstream>
#include <iomanip>
#include <ostream>
#include <sstream>
#include <string>
#include <vector>

#include <json.hpp>

#include "mcc/analysis.hpp"
#include "mcc/closure.hpp"
#include "mcc/coatoms.hpp"
#include "mcc/generators.hpp"
#include "mcc/io.hpp"
#include "mcc/keys.hpp"
#include "mcc/mccenum.hpp"

namespace mcc::cli {

enum class Command { solve, oracle, keys, closure, coatoms, analyze, generate, bench };
enum class Format { text, json };

inline constexpr int kExitOk = 0;
inline constexpr int kExitError = 1;
inline constexpr int kExitIncomplete = 2;

struct GenerateOptions {
  std::string family;  // random | exponential | reduction | cnf | poset | fano | pg
  std::size_t n = 8;
  std::size_t imps = 6;
  std::size_t max_premise = 2;
  std::size_t max_conclusion = 1;
  std::size_t edges = 3;
  std::size_t dim = 2;
  double density = 0.3;
  bool reduce = false;  // cnf: apply the uv reduction to the generated base
  std::string output;   // empty: write to the output stream
};

struct RunConfig {
  Command command = Command::solve;
  std::vector<std::string> inputs;
  Format format = Format::text;
  Limits limits;
  std::uint64_t seed = 0;
  std::string set;  // closure --set
  GenerateOptions generate;
  std::size_t bench_max = 8;
};

namespace detail {

using nlohmann::json;

inline json sets_json(const GroundSet& g, const std::vector<ElemSet>& sets) {
  json arr = json::array();
  for (const auto& s : sets) {
    json one = json::array();
    for (auto e : s) one.push_back(g.label(e));
    arr.push_back(std::move(one));
  }
  return arr;
}

inline json set_json(const GroundSet& g, const ElemSet& s) { return sets_json(g, {s}).front(); }

inline Instance load_instance(const RunConfig& cfg) {
  if (cfg.inputs.empty()) throw Error(Errc::invalid_params, "missing instance file");
  std::ifstream in(cfg.inputs.front());
  if (!in) throw Error(Errc::invalid_params, "cannot open '" + cfg.inputs.front() + "'");
  return parse_instance(in);
}

inline json stats_json(const SolveStats& s) {
  return {{"key_count", s.key_count},
          {"transversal_steps", s.transversal_steps},
          {"key_seconds", s.key_seconds},
          {"transversal_seconds", s.transversal_seconds}};
}

inline int emit_solution(const SolutionSet& sol, const RunConfig& cfg, std::ostream& out, std::ostream& err) {
  const auto& g = sol.ground;
  if (cfg.format == Format::json) {
    json j{{"solutions", sets_json(g, sol.sets)}, {"stats", stats_json(sol.stats)}, {"complete", sol.complete}};
    if (!sol.complete) {
      j["incomplete_phase"] = sol.incomplete_phase;
      j["partial_keys"] = sets_json(g, sol.partial_keys);
    }
    out << j.dump(2) << '\n';
  } else if (sol.complete) {
    write_sets(out, g, sol.sets);
    err << "# keys=" << sol.stats.key_count << " transversal_steps=" << sol.stats.transversal_steps
        << " key_s=" << sol.stats.key_seconds << " mis_s=" << sol.stats.transversal_seconds << '\n';
  } else {
    out << "incomplete: " << sol.incomplete_phase << '\n';
    write_keys(out, g, sol.partial_keys);
  }
  return sol.complete ? kExitOk : kExitIncomplete;
}

inline const char* yes_no(bool b) { return b ? "yes" : "no"; }

inline std::string witness_text(const GroundSet& g, const CheckResult& r) {
  std::string s;
  for (const auto& w : r.witness) s += (s.empty() ? "" : " | ") + format_set(g, w);
  return s;
}

inline json check_json(const GroundSet& g, const CheckResult& r) {
  json j{{"holds", r.holds}};
  if (!r.holds) {
    j["witness"] = sets_json(g, r.witness);
    j["detail"] = r.detail;
  }
  return j;
}

inline std::vector<std::string> labels_of(const GroundSet& g, const std::vector<std::size_t>& idx) {
  std::vector<std::string> out;
  for (auto i : idx) out.push_back(g.label(i));
  return out;
}

inline int run_analyze(const Instance& inst, const RunConfig& cfg, std::ostream& out) {
  const auto r = analyze(inst.base, cfg.limits);
  const auto& g = inst.base.ground();
  if (cfg.format == Format::json) {
    json j;
    j["standard"] = check_json(g, r.standard);
    j["atomistic"] = check_json(g, r.atomistic);
    auto opt = [&](const std::optional<CheckResult>& c) { return c ? check_json(g, *c) : json("n/a"); };
    j["biatomic"] = opt(r.biatomic);
    j["distributive"] = opt(r.distributive);
    j["modular"] = opt(r.modular);
    j["mingen_independent"] = opt(r.mingen_independent);
    j["lower_bounded"] = r.lower_bounded ? json(*r.lower_bounded) : json("n/a");
    j["d_cycle"] = labels_of(g, r.d_cycle);
    j["d_reflexive"] = labels_of(g, r.d_reflexive);
    j["caratheodory"] = r.caratheodory;
    j["log_bound_holds"] = r.log_bound_holds ? json(*r.log_bound_holds) : json("n/a");
    j["notes"] = r.notes;
    out << j.dump(2) << '\n';
    return kExitOk;
  }
  auto line = [&](const std::string& name, const std::string& value, const std::string& extra = "") {
    out << std::left << std::setw(20) << name << value;
    if (!extra.empty()) out << "  witness: " << extra;
    out << '\n';
  };
  auto check = [&](const std::string& name, const CheckResult& c) {
    line(name, yes_no(c.holds), c.holds ? "" : witness_text(g, c));
  };
  auto opt_check = [&](const std::string& name, const std::optional<CheckResult>& c) {
    if (c)
      check(name, *c);
    else
      line(name, "n/a");
  };
  check("standard", r.standard);
  check("atomistic", r.atomistic);
  opt_check("biatomic", r.biatomic);
  opt_check("distributive", r.distributive);
  opt_check("modular", r.modular);
  opt_check("mingen_independent", r.mingen_independent);
  if (r.lower_bounded) {
    std::string cyc;
    for (const auto& l : labels_of(g, r.d_cycle)) cyc += (cyc.empty() ? "" : " D ") + l;
    line("lower_bounded", yes_no(*r.lower_bounded), cyc);
  } else {
    line("lower_bounded", "n/a");
  }
  line("caratheodory", std::to_string(r.caratheodory));
  line("log_bound", r.log_bound_holds ? yes_no(*r.log_bound_holds) : "n/a");
  for (const auto& n : r.notes) out << "# " << n << '\n';
  return kExitOk;
}

inline Instance build_generated(const RunConfig& cfg) {
  const auto& o = cfg.generate;
  if (o.family == "random")
    return gen_random({o.n, o.imps, o.max_premise, o.max_conclusion, o.edges, cfg.seed});
  if (o.family == "exponential") return gen_exponential(o.n);
  if (o.family == "fano" || o.family == "pg") {
    auto base = o.family == "fano" ? gen_fano() : gen_projective_gf2(o.dim);
    GroundSet g = base.ground();
    return {std::move(base), ConsistencyGraph(std::move(g), {})};
  }
  if (o.family == "poset") {
    auto base = gen_poset_convexity(gen_random_poset(o.n, o.density, cfg.seed));
    GroundSet g = base.ground();
    return {std::move(base), ConsistencyGraph(std::move(g), {})};
  }
  if (o.family == "reduction") {
    if (cfg.inputs.empty()) throw Error(Errc::invalid_params, "reduction needs an input base");
    std::ifstream in(cfg.inputs.front());
    if (!in) throw Error(Errc::invalid_params, "cannot open '" + cfg.inputs.front() + "'");
    return gen_reduction(parse_instance(in).base);
  }
  if (o.family == "cnf") {
    CnfFormula f;
    if (!cfg.inputs.empty()) {
      std::ifstream in(cfg.inputs.front());
      if (!in) throw Error(Errc::invalid_params, "cannot open '" + cfg.inputs.front() + "'");
      f = parse_cnf(in);
    } else {
      f = gen_random_cnf(o.n, o.imps, cfg.seed);
    }
    auto base = gen_cnf_lower_bounded(f);
    if (o.reduce) return gen_reduction(base);
    GroundSet g = base.ground();
    return {std::move(base), ConsistencyGraph(std::move(g), {})};
  }
  throw Error(Errc::invalid_params, "unknown family '" + o.family + "'");
}

inline int run_bench(const RunConfig& cfg, std::ostream& out) {
  out << "family,param,elements,implications,edges,keys,solutions,key_ms,mis_ms\n";
  auto row = [&](const std::string& family, std::size_t param, const Instance& inst) {
    const auto sol = solve(inst.base, inst.graph, cfg.limits);
    out << family << ',' << param << ',' << inst.base.size() << ',' << inst.base.implications().size() << ','
        << inst.graph.edges().size() << ',' << sol.stats.key_count << ','
        << (sol.complete ? std::to_string(sol.sets.size()) : "incomplete") << ','
        << sol.stats.key_seconds * 1e3 << ',' << sol.stats.transversal_seconds * 1e3 << '\n';
    return sol.complete;
  };
  bool complete = true;
  for (std::size_t n = 1; n <= cfg.bench_max; ++n) complete &= row("exponential", n, gen_exponential(n));
  for (std::size_t n = 4; n <= 4 + cfg.bench_max; n += 2) {
    auto base = gen_poset_convexity(gen_random_poset(n, 0.3, cfg.seed + n));
    RandomParams p{n, 0, 1, 1, std::min<std::size_t>(n, n * (n - 1) / 2), cfg.seed + n};
    ConsistencyGraph graph(base.ground(), gen_random(p).graph.edges());
    complete &= row("poset_convexity", n, {std::move(base), std::move(graph)});
  }
  for (std::size_t m = 1; m <= cfg.bench_max / 2 + 1; ++m) {
    auto base = gen_cnf_lower_bounded(gen_random_cnf(6, m, cfg.seed + m));
    complete &= row("cnf_reduction", m, gen_reduction(base));
  }
  for (std::size_t n = 6; n <= 6 + 2 * cfg.bench_max; n += 2)
    complete &= row("random", n, gen_random({n, n, 2, 1, n / 2, cfg.seed + n}));
  return complete ? kExitOk : kExitIncomplete;
}

}  // namespace detail

/// Executes one command; diagnostics go to `err`. Returns the process exit
/// code: 0 ok, 1 error, 2 a cap was hit.
inline int run(const RunConfig& cfg, std::ostream& out, std::ostream& err) {
  using namespace detail;
  try {
    switch (cfg.command) {
      case Command::solve: {
        const auto inst = load_instance(cfg);
        return emit_solution(solve(inst.base, inst.graph, cfg.limits), cfg, out, err);
      }
      case Command::oracle: {
        const auto inst = load_instance(cfg);
        const auto brute = brute_force_solve(inst.base, inst.graph, cfg.limits);
        const auto fast = solve(inst.base, inst.graph, cfg.limits);
        const bool agree = fast.complete && fast.sets == brute.sets;
        if (cfg.format == Format::json) {
          out << json{{"solutions", sets_json(brute.ground, brute.sets)}, {"agree", agree}}.dump(2) << '\n';
        } else {
          write_sets(out, brute.ground, brute.sets);
          out << "agree: " << yes_no(agree) << '\n';
        }
        if (!fast.complete) return kExitIncomplete;
        return agree ? kExitOk : kExitError;
      }
      case Command::keys: {
        const auto inst = load_instance(cfg);
        const auto base = inst.graph.empty() ? inst.base : augment_with_inconsistency(inst.base, inst.graph);
        try {
          const auto keys = enumerate_keys(base, cfg.limits.key_cap);
          if (cfg.format == Format::json)
            out << json{{"count", keys.keys.size()}, {"keys", sets_json(keys.ground, keys.keys)}}.dump(2) << '\n';
          else
            write_keys(out, keys.ground, keys.keys);
          return kExitOk;
        } catch (const OutputLimitExceeded& e) {
          if (cfg.format == Format::json)
            out << json{{"count", e.partial().size()},
                        {"keys", sets_json(base.ground(), e.partial())},
                        {"complete", false}}
                       .dump(2)
                << '\n';
          else {
            out << "incomplete: keys\n";
            write_keys(out, base.ground(), e.partial());
          }
          return kExitIncomplete;
        }
      }
      case Command::closure: {
        const auto inst = load_instance(cfg);
        const auto& g = inst.base.ground();
        const ElemSet c = close(inst.base, parse_set(g, cfg.set));
        if (cfg.format == Format::json)
          out << json{{"closure", set_json(g, c)}}.dump(2) << '\n';
        else
          out << format_set(g, c) << '\n';
        return kExitOk;
      }
      case Command::coatoms: {
        const auto inst = load_instance(cfg);
        const auto& g = inst.base.ground();
        const auto c = co_atoms(inst.base, cfg.limits);
        if (cfg.format == Format::json)
          out << json{{"coatoms", sets_json(g, c)}}.dump(2) << '\n';
        else
          write_sets(out, g, c);
        return kExitOk;
      }
      case Command::analyze:
        return run_analyze(load_instance(cfg), cfg, out);
      case Command::generate: {
        const auto inst = build_generated(cfg);
        if (cfg.generate.output.empty()) {
          write_instance(out, inst.base, inst.graph);
        } else {
          std::ofstream file(cfg.generate.output);
          if (!file) throw Error(Errc::invalid_params, "cannot write '" + cfg.generate.output + "'");
          write_instance(file, inst.base, inst.graph);
        }
        return kExitOk;
      }
      case Command::bench:
        return run_bench(cfg, out);
    }
  } catch (const OutputLimitExceeded& e) {
    err << "error in phase " << e.phase() << ": " << e.what() << '\n';
    return kExitIncomplete;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return kExitError;
  }
  return kExitError;
}

}  // namespace mcc::cli
