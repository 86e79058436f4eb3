// Reproduction runs for the flattening results, one id per claim.

#ifndef FLATTEAM_EXPERIMENTS_HPP
#define FLATTEAM_EXPERIMENTS_HPP

#include <cstdint>
#include <string>
#include <vector>

#include "flatteam/evaluator.hpp"
#include "flatteam/flattening.hpp"

namespace flatteam {

struct ExperimentOptions {
  Strategy strategy = Strategy::optimized();
  EvalBudget budget = {};
  ExclusionFlattening exclusion = ExclusionFlattening::Top;
  std::size_t max_domain = 3;     // universe structures have 1..max_domain elements
  std::size_t per_size_cap = 6;   // isomorphism classes kept per domain size
  std::uint64_t seed = 20240611;  // formula pools and random graphs
  std::size_t pool_size = 200;
};

struct ExperimentInfo {
  std::string id;
  std::string claim;  // what is checked
};

struct ExperimentResult {
  enum class Verdict { Pass, Fail, Inapplicable };

  std::string id;
  Verdict verdict = Verdict::Pass;
  std::string details;  // deterministic, single line
  double seconds = 0;   // wall time; not part of the report line
};

const char* verdict_name(ExperimentResult::Verdict v);

const std::vector<ExperimentInfo>& experiment_list();

// Throws std::invalid_argument on an unknown id. Budget and evaluation
// errors are caught and reported as a failing result.
ExperimentResult run_experiment(const std::string& id, const ExperimentOptions& opts = {});

// `id<TAB>verdict<TAB>details`
std::string report_line(const ExperimentResult& r);

// The disconnectedness sentence of FO(inc, F) and the separating sentence of
// FO(anon, F), in concrete syntax.
extern const char* const kDisconnectSentence;
extern const char* const kSeparatingSentence;

}  // namespace flatteam

#endif  // FLATTEAM_EXPERIMENTS_HPP
