#ifndef FLATTEAM_REPORT_HPP
#define FLATTEAM_REPORT_HPP

#include <optional>
#include <string>
#include <vector>

#include "flatteam/team.hpp"

namespace flatteam {

// Outcome of a bounded property check. Verdicts are relative to the universe
// that was searched, never claims of unbounded validity.
struct PropertyReport {
  enum class Verdict { Holds, Counterexample, Inapplicable };

  Verdict verdict = Verdict::Holds;
  std::string universe;  // descriptor of what was enumerated
  std::string detail;    // human-readable explanation of the witness

  // Witness, filled for counterexamples where it makes sense.
  std::optional<std::size_t> structure_index;
  std::string structure_name;
  std::vector<Team> teams;

  bool holds() const { return verdict == Verdict::Holds; }
  bool refuted() const { return verdict == Verdict::Counterexample; }
};

const char* verdict_name(PropertyReport::Verdict v);

}  // namespace flatteam

#endif  // FLATTEAM_REPORT_HPP
