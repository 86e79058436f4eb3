// flatteam: command-line front end for the team-semantics model checker.
//
// Exit codes: 0 true / holds / all pass, 1 false / counterexample / any
// failure, 2 usage, parse, evaluation or budget error.

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <sstream>

#include "flatteam/analysis.hpp"
#include "flatteam/evaluator.hpp"
#include "flatteam/experiments.hpp"
#include "flatteam/flattening.hpp"
#include "flatteam/parser.hpp"
#include "flatteam/structure.hpp"
#include "flatteam/team.hpp"

using namespace flatteam;

namespace {

struct EvalFlags {
  std::string strategy = "optimized";
  std::size_t budget_rows = EvalBudget{}.max_team_rows;
  std::uint64_t budget_branches = EvalBudget{}.max_branches;
  std::int64_t timeout_ms = EvalBudget{}.timeout.count();

  void add_to(CLI::App* app) {
    app->add_option("--strategy", strategy, "naive or optimized")
        ->check(CLI::IsMember({"naive", "optimized"}));
    app->add_option("--budget-rows", budget_rows, "largest team the search may build")
        ->check(CLI::PositiveNumber);
    app->add_option("--budget-branches", budget_branches, "search steps per evaluation")
        ->check(CLI::PositiveNumber);
    app->add_option("--timeout-ms", timeout_ms, "wall time per evaluation")
        ->check(CLI::PositiveNumber);
  }
  Strategy make_strategy() const {
    return strategy == "naive" ? Strategy::naive() : Strategy::optimized();
  }
  EvalBudget make_budget() const {
    EvalBudget b;
    b.max_team_rows = budget_rows;
    b.max_branches = budget_branches;
    b.timeout = std::chrono::milliseconds(timeout_ms);
    return b;
  }
};

ExclusionFlattening exclusion_mode(const std::string& s) {
  return s == "neq" ? ExclusionFlattening::Inequality : ExclusionFlattening::Top;
}

void write_output(const std::string& text, const std::string& path) {
  if (path.empty()) {
    std::cout << text;
    return;
  }
  std::ofstream out(path);
  if (!out) throw std::runtime_error("cannot write " + path);
  out << text;
}

int cmd_eval(const std::string& model, const std::string& team_file, bool empty_team,
             const std::string& text, const EvalFlags& flags) {
  const Structure s = load_model(model);
  if (s.size() == 1)
    std::cerr << "warning: one-element domain; anonymity atoms cannot hold on non-empty teams\n";
  const Formula f = parse_formula(text);
  Team x;
  if (empty_team == !team_file.empty())
    throw std::runtime_error("give exactly one of --team and --empty-team");
  x = empty_team ? Team::unit() : load_team(team_file, s);
  Evaluator ev(s, flags.make_strategy(), flags.make_budget());
  const bool v = ev.eval(f, x);
  std::cout << (v ? "true" : "false") << '\n';
  std::cerr << "strategy " << ev.strategy().describe() << ", branches " << ev.stats().branches
            << ", cache hits " << ev.stats().cache_hits << '\n';
  return v ? 0 : 1;
}

int cmd_check(const std::string& property, const std::vector<std::string>& formulas,
              std::size_t max_domain, std::size_t cap, const std::vector<std::string>& vars,
              const EvalFlags& flags) {
  UniverseOptions uo;
  uo.max_domain = max_domain;
  uo.per_size_cap = cap;
  uo.vars = vars;
  const Universe u = default_universe(uo);
  const CheckOptions co{flags.make_strategy(), flags.make_budget()};
  const bool binary = property == "equiv" || property == "entails";
  if (formulas.size() != (binary ? 2u : 1u))
    throw std::runtime_error(property + " takes " + (binary ? "two formulas" : "one formula"));
  const Formula f = parse_formula(formulas[0]);
  PropertyReport r;
  if (property == "flat") r = is_flat(f, u, co);
  else if (property == "dc") r = is_downwards_closed(f, u, co);
  else if (property == "uc") r = is_union_closed(f, u, co);
  else if (property == "df") r = is_downwards_flat(f, u, co);
  else if (property == "uf") r = is_upwards_flat(f, u, co);
  else if (property == "equiv") r = equivalent(f, parse_formula(formulas[1]), u, co);
  else if (property == "entails") r = entails(f, parse_formula(formulas[1]), u, co);
  else if (property.rfind("coherent:", 0) == 0)
    r = is_n_coherent(f, std::stoul(property.substr(9)), u, co);
  else
    throw std::runtime_error("unknown property " + property);
  std::cout << verdict_name(r.verdict) << '\n';
  if (!r.detail.empty()) std::cout << r.detail << '\n';
  std::cout << "universe: " << r.universe << '\n';
  return r.holds() ? 0 : 1;
}

int cmd_gen(const std::string& family, const std::string& out) {
  const auto colon = family.find(':');
  if (colon == std::string::npos) throw std::runtime_error("family must be cycle:L, A:n or B:n");
  const std::string kind = family.substr(0, colon);
  const unsigned long n = std::stoul(family.substr(colon + 1));
  Structure s = kind == "cycle" ? gen_cycle(n, true)
              : kind == "A"     ? gen_A(static_cast<unsigned>(n))
              : kind == "B"     ? gen_B(static_cast<unsigned>(n))
                                : throw std::runtime_error("unknown family " + kind);
  write_output("# " + family + ", symmetric edges\n" + write_model(s), out);
  return 0;
}

int cmd_automorphisms(const std::string& model, std::size_t max_domain) {
  const Structure s = load_model(model);
  for (const Permutation& p : automorphisms(s, max_domain)) {
    for (std::size_t i = 0; i < p.size(); ++i)
      std::cout << (i ? " " : "") << s.element_name(static_cast<ElemId>(i)) << "->"
                << s.element_name(p(static_cast<ElemId>(i)));
    std::cout << '\n';
  }
  return 0;
}

int cmd_experiments(const std::string& select, const std::string& report, bool list,
                    const ExperimentOptions& opts) {
  if (list) {
    for (const ExperimentInfo& e : experiment_list()) std::cout << e.id << '\t' << e.claim << '\n';
    return 0;
  }
  std::vector<std::string> ids;
  if (select == "all") {
    for (const ExperimentInfo& e : experiment_list()) ids.push_back(e.id);
  } else {
    std::stringstream in(select);
    for (std::string id; std::getline(in, id, ',');) ids.push_back(id);
  }
  std::ostringstream lines;
  bool failed = false;
  for (const std::string& id : ids) {
    const ExperimentResult r = run_experiment(id, opts);
    failed |= r.verdict == ExperimentResult::Verdict::Fail;
    lines << report_line(r) << '\n';
    std::cerr << verdict_name(r.verdict) << "  " << id << "  (" << r.seconds << " s)\n";
  }
  write_output(lines.str(), report);
  return failed ? 1 : 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Model checker for team semantics with the flattening operator"};
  app.require_subcommand(1);

  EvalFlags eval_flags;
  std::string model, team_file, formula_text;
  bool empty_team = false;
  auto* eval_cmd = app.add_subcommand("eval", "evaluate a formula on a team");
  eval_cmd->add_option("--model", model, "model file")->required();
  eval_cmd->add_option("--team", team_file, "team file");
  eval_cmd->add_flag("--empty-team", empty_team, "evaluate on {empty assignment}");
  eval_cmd->add_option("formula", formula_text)->required();
  eval_flags.add_to(eval_cmd);

  EvalFlags check_flags;
  std::string property;
  std::vector<std::string> check_formulas;
  std::size_t max_domain = 3, cap = 6;
  std::vector<std::string> vars = {"x", "y"};
  auto* check_cmd = app.add_subcommand("check", "bounded property check");
  check_cmd->add_option("property", property, "flat, dc, uc, df, uf, coherent:N, equiv, entails")
      ->required();
  check_cmd->add_option("formulas", check_formulas)->required();
  check_cmd->add_option("--universe-max-domain", max_domain)->check(CLI::Range(1, 3));
  check_cmd->add_option("--universe-cap", cap, "structures kept per domain size")
      ->check(CLI::PositiveNumber);
  check_cmd->add_option("--vars", vars, "team variables")->delimiter(',');
  check_flags.add_to(check_cmd);

  std::string family, out_path;
  auto* gen_cmd = app.add_subcommand("gen", "write a graph model: cycle:L, A:n or B:n");
  gen_cmd->add_option("family", family)->required();
  gen_cmd->add_option("--out", out_path, "output file (default stdout)");

  std::string flatten_text, exclusion = "top";
  auto* flatten_cmd = app.add_subcommand("flatten", "print the flattening of a formula");
  flatten_cmd->add_option("formula", flatten_text)->required();
  flatten_cmd->add_option("--exclusion-flattening", exclusion)
      ->check(CLI::IsMember({"top", "neq"}));

  std::string simplify_text;
  auto* simplify_cmd = app.add_subcommand("simplify-f", "rewrite F over atoms and conjunctions");
  simplify_cmd->add_option("formula", simplify_text)->required();

  std::string auto_model;
  std::size_t auto_max = 8;
  auto* auto_cmd = app.add_subcommand("automorphisms", "list the automorphisms of a model");
  auto_cmd->add_option("--model", auto_model)->required();
  auto_cmd->add_option("--max-domain", auto_max)->check(CLI::PositiveNumber);

  EvalFlags exp_flags;
  std::string select = "all", report, exp_exclusion = "top";
  bool list = false;
  std::size_t exp_domain = 3;
  auto* exp_cmd = app.add_subcommand("experiments", "run the reproduction suite");
  exp_cmd->add_option("--select", select, "all, or comma separated ids");
  exp_cmd->add_option("--report", report, "write report lines here (default stdout)");
  exp_cmd->add_flag("--list", list, "list experiment ids");
  exp_cmd->add_option("--universe-max-domain", exp_domain)->check(CLI::Range(1, 3));
  exp_cmd->add_option("--exclusion-flattening", exp_exclusion)
      ->check(CLI::IsMember({"top", "neq"}));
  exp_flags.add_to(exp_cmd);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e);
    return rc == 0 ? 0 : 2;
  }

  try {
    if (*eval_cmd) return cmd_eval(model, team_file, empty_team, formula_text, eval_flags);
    if (*check_cmd) return cmd_check(property, check_formulas, max_domain, cap, vars, check_flags);
    if (*gen_cmd) return cmd_gen(family, out_path);
    if (*flatten_cmd) {
      std::cout << render(flatten(parse_formula(flatten_text), exclusion_mode(exclusion))) << '\n';
      return 0;
    }
    if (*simplify_cmd) {
      std::cout << render(simplify_F(parse_formula(simplify_text))) << '\n';
      return 0;
    }
    if (*auto_cmd) return cmd_automorphisms(auto_model, auto_max);
    if (*exp_cmd) {
      ExperimentOptions opts;
      opts.strategy = exp_flags.make_strategy();
      opts.budget = exp_flags.make_budget();
      opts.exclusion = exclusion_mode(exp_exclusion);
      opts.max_domain = exp_domain;
      return cmd_experiments(select, report, list, opts);
    }
  } catch (const ParseError& e) {
    std::cerr << "parse error: " << e.what() << '\n';
    return 2;
  } catch (const BudgetExceeded& e) {
    std::cerr << "budget exceeded: " << e.what() << '\n';
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 2;
  }
  return 2;
}
