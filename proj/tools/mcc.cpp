// Command-line front end for the maximal consistent closed set library.

#include <iostream>

#include <CLI11.hpp>

#include "mcc/cli.hpp"

int main(int argc, char** argv) {
  using mcc::cli::Command;
  mcc::cli::RunConfig cfg;
  std::string format = "text";

  CLI::App app{"Enumerate maximal consistent closed sets of an implicational base"};
  app.require_subcommand(1);
  app.fallthrough();
  app.add_option("--format", format, "Output format")->check(CLI::IsMember({"text", "json"}));
  app.add_option("--limit-ground", cfg.limits.exhaustive, "Largest ground set for exhaustive procedures")
      ->check(CLI::PositiveNumber);
  app.add_option("--cap-keys", cfg.limits.key_cap, "Maximum number of keys")->check(CLI::PositiveNumber);
  app.add_option("--cap-mis", cfg.limits.mis_cap, "Maximum number of transversals")->check(CLI::PositiveNumber);
  app.add_option("--seed", cfg.seed, "Random seed");

  auto with_input = [&](CLI::App* sub) {
    sub->add_option("instance", cfg.inputs, "Instance file")->required()->check(CLI::ExistingFile);
    return sub;
  };
  auto* solve = with_input(app.add_subcommand("solve", "Maximal consistent closed sets (key pipeline)"));
  auto* oracle = with_input(app.add_subcommand("oracle", "Brute-force solutions and agreement check"));
  auto* keys = with_input(app.add_subcommand("keys", "Keys of the base augmented with the graph"));
  auto* closure = with_input(app.add_subcommand("closure", "Closure of a set"));
  closure->add_option("--set", cfg.set, "Elements, comma separated")->required();
  auto* coatoms = with_input(app.add_subcommand("coatoms", "Co-atoms of the base"));
  auto* analyze = with_input(app.add_subcommand("analyze", "Structural report"));

  auto* generate = app.add_subcommand("generate", "Write a generated instance");
  auto& g = cfg.generate;
  generate->add_option("family", g.family, "random|exponential|reduction|cnf|poset|fano|pg")
      ->required()
      ->check(CLI::IsMember({"random", "exponential", "reduction", "cnf", "poset", "fano", "pg"}));
  generate->add_option("--input", cfg.inputs, "Base (reduction) or DIMACS file (cnf)")->check(CLI::ExistingFile);
  generate->add_option("--n", g.n, "Size parameter");
  generate->add_option("--imps", g.imps, "Implications (random) or clauses (cnf)");
  generate->add_option("--max-premise", g.max_premise, "Largest premise (random)");
  generate->add_option("--max-conclusion", g.max_conclusion, "Largest conclusion (random)");
  generate->add_option("--edges", g.edges, "Inconsistent pairs (random)");
  generate->add_option("--density", g.density, "Relation density (poset)");
  generate->add_option("--dim", g.dim, "Projective dimension (pg)");
  generate->add_flag("--reduce", g.reduce, "Apply the uv reduction (cnf)");
  generate->add_option("-o,--output", g.output, "Output file");

  auto* bench = app.add_subcommand("bench", "Key and solution counts over the instance families (CSV)");
  bench->add_option("--max", cfg.bench_max, "Largest family parameter");

  CLI11_PARSE(app, argc, argv);

  cfg.format = format == "json" ? mcc::cli::Format::json : mcc::cli::Format::text;
  if (solve->parsed()) cfg.command = Command::solve;
  if (oracle->parsed()) cfg.command = Command::oracle;
  if (keys->parsed()) cfg.command = Command::keys;
  if (closure->parsed()) cfg.command = Command::closure;
  if (coatoms->parsed()) cfg.command = Command::coatoms;
  if (analyze->parsed()) cfg.command = Command::analyze;
  if (generate->parsed()) cfg.command = Command::generate;
  if (bench->parsed()) cfg.command = Command::bench;

  return mcc::cli::run(cfg, std::cout, std::cerr);
}
