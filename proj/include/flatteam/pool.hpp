// Seeded random formulas for property sweeps.

#ifndef FLATTEAM_POOL_HPP
#define FLATTEAM_POOL_HPP

#include <cstdint>
#include <random>
#include <set>
#include <string>
#include <vector>

#include "flatteam/analysis.hpp"
#include "flatteam/formula.hpp"

namespace flatteam {

struct PoolOptions {
  std::uint64_t seed = 1;
  std::size_t count = 200;
  std::size_t max_depth = 4;
  // Free and bound variables. Quantifiers only rebind these, so teams in a
  // universe over the same variables never grow past |M|^|vars| rows.
  std::vector<std::string> vars = {"x", "y"};
  Signature relations = {{"P", 1}, {"E", 2}};
  std::set<Kind> kinds;  // empty means every kind
  // Team atoms take unary tuples only (dep(x;y), x anon y, ...).
  bool unary_atoms = false;
  // Coarse static filter: upper bound on naive_cost(f, max_rows).
  double max_cost = 1e9;
  std::size_t max_rows = 9;
  // Measured filter: naive evaluation on the full team of a fixed
  // three-element structure must finish within this many branches.
  // Zero disables the probe.
  std::uint64_t probe_branches = 20000;
};

// Every kind except neg, vv and some.
std::set<Kind> flattenable_kinds();
std::set<Kind> all_kinds();

// Rough count of evaluation steps the naive strategy may take on a team of
// `rows` rows over a domain of `domain` elements.
double naive_cost(const Formula& f, std::size_t rows, std::size_t domain = 3);

// `count` structurally distinct formulas, deterministic in the seed. Throws
// if the options cannot produce that many within a bounded number of tries.
std::vector<Formula> generate_pool(const PoolOptions& opts);

}  // namespace flatteam

#endif  // FLATTEAM_POOL_HPP
