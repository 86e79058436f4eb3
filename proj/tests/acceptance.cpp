// Acceptance run: one line per criterion, `criterion N <id>: PASS|FAIL`.
// Usage: acceptance [N ...]   (no arguments runs all eleven)
// Exit status 0 iff every selected criterion passed.

#include <algorithm>
#include <cstdlib>
#include <iostream>
#include <string>
#include <vector>

#include "flatteam/experiments.hpp"

using namespace flatteam;

namespace {

struct Criterion {
  int number;
  const char* experiment;
  double limit_seconds;  // wall time, default optimized strategy
};

// Exact verdicts throughout: no tolerances apply.
const std::vector<Criterion> kCriteria = {
    {1, "atoms-flattening", 30},  {2, "atoms-F", 30},
    {3, "F-properties", 120},     {4, "anon-sentence", 1},
    {5, "disconnect", 120},       {6, "separate", 120},
    {7, "magma", 120},            {8, "strategy-agreement", 180},
    {9, "translation-F-case", 60},       {10, "closure-lattice", 120},
    {11, "ne-distribution", 120},
};

bool run(const Criterion& c) {
  const ExperimentOptions opts;
  ExperimentResult r = run_experiment(c.experiment, opts);
  bool ok = r.verdict == ExperimentResult::Verdict::Pass;
  std::string extra;
  if (c.number == 11) {
    // The measured relation must not depend on the strategy used.
    ExperimentOptions naive = opts;
    naive.strategy = Strategy::naive();
    const ExperimentResult n = run_experiment(c.experiment, naive);
    const auto relation = [](const std::string& d) { return d.substr(0, d.find(" over ")); };
    if (relation(n.details) != relation(r.details)) {
      ok = false;
      extra = "; naive run gave: " + n.details;
    }
  }
  const bool in_time = r.seconds <= c.limit_seconds;
  if (!in_time) extra += "; time limit exceeded";
  ok = ok && in_time;
  std::cout << "criterion " << c.number << " " << c.experiment << ": " << (ok ? "PASS" : "FAIL")
            << " (" << r.seconds << " s, limit " << c.limit_seconds << " s) " << r.details << extra
            << std::endl;
  return ok;
}

}  // namespace

int main(int argc, char** argv) {
  std::vector<int> selected;
  for (int i = 1; i < argc; ++i) selected.push_back(std::atoi(argv[i]));
  bool all_ok = true;
  for (const Criterion& c : kCriteria) {
    if (!selected.empty() &&
        std::find(selected.begin(), selected.end(), c.number) == selected.end())
      continue;
    all_ok = run(c) && all_ok;
  }
  return all_ok ? 0 : 1;
}
