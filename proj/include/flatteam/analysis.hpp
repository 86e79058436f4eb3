// Bounded semantic property checks. Every verdict is relative to the
// universe of structures and teams that was enumerated.

#ifndef FLATTEAM_ANALYSIS_HPP
#define FLATTEAM_ANALYSIS_HPP

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "flatteam/evaluator.hpp"
#include "flatteam/formula.hpp"
#include "flatteam/report.hpp"
#include "flatteam/structure.hpp"
#include "flatteam/team.hpp"

namespace flatteam {

using Signature = std::vector<std::pair<std::string, std::size_t>>;  // name, arity

struct Universe {
  std::vector<Structure> structures;
  std::vector<std::string> names;
  std::vector<std::string> vars;  // every team is over these variables

  void add(Structure s, std::string name);
  std::string describe() const;
};

struct UniverseOptions {
  std::size_t max_domain = 3;
  // Structures kept per domain size after removing isomorphic copies.
  std::size_t per_size_cap = 6;
  Signature signature = {{"P", 1}, {"E", 2}};
  std::vector<std::string> vars = {"x", "y"};
};

// Structures over the signature with 1..max_domain elements, one per
// isomorphism class, thinned to an evenly spaced selection of at most
// per_size_cap classes per size (always keeping the empty and the full one).
Universe default_universe(const UniverseOptions& opts = {});

// Satisfaction of a formula on every team of every structure. Team i of
// structure k is all_rows(structure, |vars|) filtered by the bits of i.
struct SatTable {
  std::vector<std::vector<char>> sat;  // [structure][team mask]
  std::vector<std::vector<Row>> rows;  // [structure] possible rows
};

struct CheckOptions {
  Strategy strategy = {};
  EvalBudget budget = {};
};

SatTable tabulate(const Formula& f, const Universe& u, const CheckOptions& opts = {});

PropertyReport is_flat(const Formula& f, const Universe& u, const CheckOptions& opts = {});
PropertyReport is_downwards_closed(const Formula& f, const Universe& u,
                                   const CheckOptions& opts = {});
// Includes the union of the empty collection: the empty team must satisfy f.
// Witness teams: two satisfying teams, then their failing union.
PropertyReport is_union_closed(const Formula& f, const Universe& u,
                               const CheckOptions& opts = {});
PropertyReport is_downwards_flat(const Formula& f, const Universe& u,
                                 const CheckOptions& opts = {});
PropertyReport is_upwards_flat(const Formula& f, const Universe& u,
                               const CheckOptions& opts = {});
// X |= f iff every Y within X with |Y| = n satisfies f.
PropertyReport is_n_coherent(const Formula& f, std::size_t n, const Universe& u,
                             const CheckOptions& opts = {});
PropertyReport equivalent(const Formula& a, const Formula& b, const Universe& u,
                          const CheckOptions& opts = {});
PropertyReport entails(const Formula& a, const Formula& b, const Universe& u,
                       const CheckOptions& opts = {});

struct ClosureProfile {
  bool flat = false, dc = false, uc = false, df = false, uf = false;
};
ClosureProfile closure_profile(const SatTable& t);
ClosureProfile closure_profile(const Formula& f, const Universe& u, const CheckOptions& opts = {});

// For every team X over `vars` with team_closure(X, maps) == X, compares
// eval(X, f) with eval(X, flatten(f)) for each formula of the pool.
// Inapplicable when the maps fail check_magma_hypothesis.
PropertyReport magma_lemma_check(const Structure& s, const std::vector<Permutation>& maps,
                                 const std::vector<Formula>& pool,
                                 const std::vector<std::string>& vars,
                                 const CheckOptions& opts = {});

}  // namespace flatteam

#endif  // FLATTEAM_ANALYSIS_HPP
