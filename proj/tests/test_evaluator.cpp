#include <gtest/gtest.h>

#include "flatteam/analysis.hpp"
#include "flatteam/evaluator.hpp"
#include "flatteam/experiments.hpp"
#include "flatteam/parser.hpp"
#include "flatteam/pool.hpp"
#include "oracle.hpp"

using namespace flatteam;

namespace {

Structure numbers(std::size_t n) {
  std::vector<std::string> d;
  for (std::size_t i = 0; i < n; ++i) d.push_back(std::to_string(i));
  return Structure(d);
}

// Two elements, P = {0}, E = {(0,1), (1,1)}.
Structure small() {
  Structure s = numbers(2);
  s.add_relation("P", 1, {{0}});
  s.add_relation("E", 2, {{0, 1}, {1, 1}});
  return s;
}

bool ev(const Structure& s, const Team& x, const char* text, Strategy st = {}) {
  return eval(s, x, parse_formula(text), st);
}

std::vector<Formula> pool(std::uint64_t seed, std::size_t count, std::set<Kind> kinds = {},
                          std::size_t depth = 4) {
  PoolOptions p;
  p.seed = seed;
  p.count = count;
  p.kinds = kinds;
  p.max_depth = depth;
  return generate_pool(p);
}

}  // namespace

TEST(Tarski, Examples) {
  const Structure s = numbers(1);
  EXPECT_TRUE(eval_tarski(s, {{"x", 0}, {"y", 0}}, parse_formula("x = y")));
  EXPECT_TRUE(eval_tarski(s, {{"x", 0}}, top()));
  EXPECT_FALSE(eval_tarski(s, {{"x", 0}}, bot()));
  EXPECT_TRUE(eval_tarski(gen_cycle(3, false), {{"x", 0}, {"y", 1}}, parse_formula("E(x,y)")));
  EXPECT_FALSE(eval_tarski(gen_cycle(3, false), {{"x", 1}, {"y", 0}}, parse_formula("E(x,y)")));
  EXPECT_TRUE(eval_tarski(gen_cycle(3, false), {}, parse_formula("A x. E y. E(x,y)")));
}

TEST(Tarski, Errors) {
  const Structure s = small();
  EXPECT_THROW(eval_tarski(s, {}, parse_formula("P(x)")), EvalError);
  EXPECT_THROW(eval_tarski(s, {{"x", 0}}, parse_formula("R(x)")), EvalError);
  EXPECT_THROW(eval_tarski(s, {{"x", 0}}, parse_formula("E(x)")), EvalError);
  EXPECT_THROW(eval_tarski(s, {{"x", 0}}, parse_formula("x = #c")), EvalError);
  EXPECT_THROW(eval_tarski(s, {{"x", 0}}, parse_formula("dep(x; x)")), EvalError);
}

TEST(Eval, EmptyTeam) {
  const Structure s = small();
  const Team empty({"x", "y"});
  for (const char* f : {"P(x)", "!E(x,y)", "x = y", "x != y", "TOP", "BOT", "dep(x; y)",
                        "anon(x; y)", "inc(x; y)", "exc(x; y)", "ind(x; y; y)"})
    EXPECT_TRUE(ev(s, empty, f)) << f;
  EXPECT_FALSE(ev(s, empty, "NE"));
}

TEST(Eval, ConstancyOnTwoRows) {
  const Structure s = numbers(2);
  const Team x({"x"}, {{0}, {1}});
  EXPECT_FALSE(ev(s, x, "const(x)"));
  EXPECT_TRUE(ev(s, Team({"x"}, {{0}}), "const(x)"));
  EXPECT_TRUE(ev(s, Team({"x"}, {{1}}), "const(x)"));
  EXPECT_TRUE(ev(s, x, "nonconst(x)"));
}

TEST(Eval, AnonymitySentenceOnOnePoint) {
  const Structure s = numbers(1);
  const Formula f = parse_formula("A x. E y. anon(x; y)");
  EXPECT_FALSE(eval_sentence(s, f));
  EXPECT_TRUE(eval_sentence(s, parse_formula("A x. E y. TOP")));
  EXPECT_FALSE(eval_sentence(s, flat(f)));
}

TEST(Eval, ExistsTopOnAnyStructure) {
  for (std::size_t n = 1; n <= 4; ++n) EXPECT_TRUE(eval_sentence(numbers(n), parse_formula("E x. TOP")));
}

TEST(Eval, GraphSentences) {
  const Formula disconnect = parse_formula(kDisconnectSentence);
  const Formula separate = parse_formula(kSeparatingSentence);
  EXPECT_TRUE(eval_sentence(gen_A(1), disconnect));
  EXPECT_FALSE(eval_sentence(gen_B(1), disconnect));
  EXPECT_TRUE(eval_sentence(gen_A(1), separate));
  EXPECT_FALSE(eval_sentence(gen_B(1), separate));
}

TEST(Eval, AtomSemantics) {
  const Structure s = numbers(3);
  const Team x({"x", "y", "z"}, {{0, 0, 0}, {0, 1, 1}, {1, 0, 1}, {1, 1, 0}});
  EXPECT_FALSE(ev(s, x, "dep(x; y)"));
  EXPECT_TRUE(ev(s, x, "dep(x, y; z)"));
  EXPECT_TRUE(ev(s, x, "anon(x; y)"));
  EXPECT_FALSE(ev(s, x, "anon(x, y; z)"));
  EXPECT_TRUE(ev(s, x, "inc(x; y)"));
  EXPECT_FALSE(ev(s, Team({"x", "y"}, {{2, 0}, {0, 1}}), "inc(x; y)"));
  EXPECT_TRUE(ev(s, Team({"x", "y"}, {{0, 1}, {0, 2}}), "exc(x; y)"));
  EXPECT_TRUE(ev(s, x, "ind(; x; y)"));
  EXPECT_TRUE(ev(s, x, "ind(; x; z)"));
  EXPECT_FALSE(ev(s, Team({"x", "y"}, {{0, 0}, {1, 1}}), "ind(; x; y)"));
}

TEST(Eval, FreeVariablesMustBeInTeam) {
  EXPECT_THROW(ev(numbers(2), Team({"x"}, {{0}}), "x = y"), EvalError);
  EXPECT_THROW(eval_sentence(numbers(2), parse_formula("P(x)")), EvalError);
}

TEST(Eval, BudgetExhaustionIsAnError) {
  const Structure s = numbers(3);
  EvalBudget b;
  b.max_branches = 10;
  // False, so the search cannot stop early.
  const Formula f = parse_formula("E x. E y. (dep(x; y) & anon(x; y))");
  EXPECT_THROW(eval_sentence(s, f, Strategy::naive(), b), BudgetExceeded);
  EvalBudget rows;
  rows.max_team_rows = 4;
  EXPECT_THROW(eval_sentence(s, parse_formula("A x. A y. TOP"), Strategy::naive(), rows),
               BudgetExceeded);
}

TEST(Eval, StatsAndStrategyNames) {
  EXPECT_EQ(Strategy::naive().describe(), "naive");
  EXPECT_EQ(Strategy::optimized().describe(), "optimized(flat-or,hook-split,flat-exists,memo)");
  const Structure a1 = gen_A(1);
  Evaluator ev(a1);
  ev.eval_sentence(parse_formula(kSeparatingSentence));
  EXPECT_GT(ev.stats().branches, 0u);
}

// Library evaluator against the reference semantics, both strategies.
TEST(Eval, AgreesWithOracle) {
  const Structure s = small();
  const auto teams = oracle::all_teams(s, {"x", "y"});
  std::size_t compared = 0;
  for (const Formula& f : pool(31, 80, all_kinds(), 3)) {
    Evaluator naive(s, Strategy::naive()), opt(s, Strategy::optimized());
    for (const auto& rows : teams) {
      if (rows.size() > 3) continue;
      const Team x = oracle::to_team(rows, {"x", "y"});
      const bool want = oracle::sat(s, rows, f);
      EXPECT_EQ(naive.eval(f, x), want) << render(f) << " on " << describe_team(x, s);
      EXPECT_EQ(opt.eval(f, x), want) << render(f) << " on " << describe_team(x, s);
      ++compared;
    }
  }
  EXPECT_GT(compared, 80u * 10);
}

TEST(Eval, FirstOrderFormulasAreFlat) {
  const Universe u = default_universe();
  for (const Formula& f : pool(32, 40, {Kind::RelAtom, Kind::NegRelAtom, Kind::Equal,
                                        Kind::NotEqual, Kind::Top, Kind::Bot, Kind::And,
                                        Kind::Or, Kind::Exists, Kind::Forall}))
    EXPECT_TRUE(is_flat(f, u).holds()) << render(f);
}

TEST(Eval, EmptyTeamPropertyWithoutNeAndNegation) {
  std::set<Kind> kinds = all_kinds();
  kinds.erase(Kind::NE);
  kinds.erase(Kind::BoolNeg);
  kinds.erase(Kind::SomeRow);  // some p fails on the empty team by definition
  const Structure s = small();
  for (const Formula& f : pool(33, 200, kinds)) {
    const std::set<std::string> fv = free_variables(f);
    const std::vector<std::string> v(fv.begin(), fv.end());
    EXPECT_TRUE(eval(s, Team(v), f)) << render(f);
  }
  EXPECT_FALSE(eval(s, Team({"x"}), parse_formula("some TOP")));
}

TEST(Eval, HookSplitMatchesDesugaredNaive) {
  const auto teams_of = [](const Structure& s) { return enumerate_teams(s, {"x", "y"}); };
  const Universe u = default_universe();
  std::size_t hooks = 0;
  for (const Formula& f : pool(34, 120)) {
    if (render(f).find("=>") == std::string::npos) continue;
    ++hooks;
    const Formula d = desugar_hook(f);
    Strategy split = Strategy::naive();
    split.mode = Strategy::Mode::Optimized;
    split.flat_aware_disjunction = split.flat_body_existential = split.memoization = false;
    split.hook_forced_split = true;
    for (const Structure& s : u.structures) {
      if (s.size() > 2) continue;
      Evaluator a(s, split), b(s, Strategy::naive());
      for (const Team& x : teams_of(s)) EXPECT_EQ(a.eval(f, x), b.eval(d, x)) << render(f);
    }
  }
  EXPECT_GT(hooks, 10u);
}

TEST(Eval, FlatIsConjunctionOverRows) {
  const Structure s = small();
  for (const Formula& f : pool(35, 60)) {
    const Formula fl = flat(f);
    const std::set<std::string> fv = free_variables(f);
    const std::vector<std::string> v(fv.begin(), fv.end());
    for (const Team& x : enumerate_teams(s, v)) {
      bool each = true;
      for (std::size_t i = 0; i < x.size(); ++i)
        each = each && eval(s, x.subteam(std::uint64_t{1} << i), f, Strategy::naive());
      EXPECT_EQ(eval(s, x, fl, Strategy::optimized()), each) << render(f);
    }
  }
}

TEST(Eval, OptimizedWithFlagsOffMatchesNaive) {
  Strategy off = Strategy::optimized();
  off.flat_aware_disjunction = off.hook_forced_split = off.flat_body_existential = false;
  const Structure s = small();
  for (const Formula& f : pool(36, 60)) {
    std::vector<std::string> v = {"x", "y"};
    Evaluator a(s, off), b(s, Strategy::naive());
    for (const Team& x : enumerate_teams(s, v)) EXPECT_EQ(a.eval(f, x), b.eval(f, x)) << render(f);
  }
}

TEST(Eval, DomainLimit) {
  std::vector<std::string> d;
  for (int i = 0; i < 256; ++i) d.push_back("e" + std::to_string(i));
  EXPECT_THROW(Structure{d}, StructureError);
}

TEST(SyntacticFlatness, Classification) {
  EXPECT_TRUE(syntactically_flat(parse_formula("E x. (P(x) | F dep(x; y))")));
  EXPECT_TRUE(syntactically_flat(parse_formula("P(x) => x = y")));
  EXPECT_FALSE(syntactically_flat(parse_formula("dep(x; y)")));
  EXPECT_FALSE(syntactically_flat(parse_formula("NE")));
  EXPECT_FALSE(syntactically_flat(parse_formula("neg P(x)")));
}
