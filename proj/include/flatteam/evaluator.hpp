// Exact lax team semantics for the formulas of formula.hpp.

#ifndef FLATTEAM_EVALUATOR_HPP
#define FLATTEAM_EVALUATOR_HPP

#include <array>
#include <chrono>
#include <cstdint>
#include <map>
#include <memory>
#include <stdexcept>
#include <string>
#include <unordered_map>
#include <vector>

#include "flatteam/formula.hpp"
#include "flatteam/structure.hpp"
#include "flatteam/team.hpp"

namespace flatteam {

// Unbound variable, unknown relation or constant, arity mismatch.
class EvalError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Thrown when a search exceeds its EvalBudget. Never reported as "false".
class BudgetExceeded : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct Strategy {
  enum class Mode { Naive, Optimized };

  Mode mode = Mode::Optimized;
  // Or: pointwise when both sides are flat, one-sided search when one is.
  bool flat_aware_disjunction = true;
  // a => p evaluated as p on the rows satisfying a.
  bool hook_forced_split = true;
  // E v. p with flat p: per row, some single witness value suffices.
  bool flat_body_existential = true;
  // Cache keyed by (node, team) for the searching connectives.
  bool memoization = true;

  static Strategy naive();
  static Strategy optimized();
  std::string describe() const;
};

struct EvalBudget {
  std::size_t max_team_rows = std::size_t{1} << 20;
  std::uint64_t max_branches = 4'000'000'000ULL;
  std::chrono::milliseconds timeout{std::chrono::minutes(10)};
};

struct EvalStats {
  std::uint64_t branches = 0;  // covers, supplements and subteams tried
  std::uint64_t cache_hits = 0;
  std::uint64_t cache_misses = 0;
};

// Evaluates formulas over one fixed structure. Compiled formulas and the memo
// table persist across calls, so reuse an Evaluator when sweeping many teams.
// Not thread-safe; use one per thread.
class Evaluator {
 public:
  static constexpr std::size_t kMaxVariables = 16;

  Evaluator(const Structure& s, Strategy strategy = {}, EvalBudget budget = {});
  // Keeps a reference to s.
  Evaluator(Structure&&, Strategy = {}, EvalBudget = {}) = delete;
  ~Evaluator();
  Evaluator(const Evaluator&) = delete;
  Evaluator& operator=(const Evaluator&) = delete;

  // Requires FV(f) within x.vars().
  bool eval(const Formula& f, const Team& x);
  // Evaluates on {∅}. Requires f to be closed.
  bool eval_sentence(const Formula& f);
  // Classical truth of a first-order formula under one assignment.
  bool eval_tarski(const Formula& f, const Assignment& a);

  const Structure& structure() const { return structure_; }
  const Strategy& strategy() const { return strategy_; }
  const EvalStats& stats() const { return stats_; }
  void reset_stats() { stats_ = {}; }
  void clear_cache();

 private:
  struct Impl;
  const Structure& structure_;
  Strategy strategy_;
  EvalBudget budget_;
  EvalStats stats_;
  std::unique_ptr<Impl> impl_;
};

bool eval(const Structure& s, const Team& x, const Formula& f, Strategy strategy = {},
          EvalBudget budget = {});
bool eval_sentence(const Structure& s, const Formula& f, Strategy strategy = {},
                   EvalBudget budget = {});
bool eval_tarski(const Structure& s, const Assignment& a, const Formula& f);

// Closed under &, |, =>, E, A over first-order formulas and F(.). Every
// member is flat (truth on a team is truth on each row).
bool syntactically_flat(const Formula& f);

}  // namespace flatteam

#endif  // FLATTEAM_EVALUATOR_HPP
