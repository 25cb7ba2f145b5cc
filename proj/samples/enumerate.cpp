// Builds a small instance in code, solves it, and cross-checks against the
// brute-force solver.

#include <iostream>

#include "mcc/io.hpp"
#include "mcc/mccenum.hpp"

int main() {
  const auto inst = mcc::parse_instance(
      "elements: 1 2 3 4 5\n"
      "imp: 1 3 -> 2\nimp: 1 2 -> 3\nimp: 2 3 -> 1\nimp: 4 -> 1\n"
      "edge: 3 4\nedge: 2 4\nedge: 2 5\n");

  const auto sol = mcc::solve(inst.base, inst.graph);
  std::cout << "keys (" << sol.keys.size() << "):\n";
  mcc::write_sets(std::cout, sol.ground, sol.keys);
  std::cout << "solutions (" << sol.sets.size() << "):\n";
  mcc::write_sets(std::cout, sol.ground, sol.sets);

  const auto brute = mcc::brute_force_solve(inst.base, inst.graph);
  std::cout << "brute force agrees: " << (brute.sets == sol.sets ? "yes" : "no") << '\n';
  return brute.sets == sol.sets ? 0 : 1;
}
