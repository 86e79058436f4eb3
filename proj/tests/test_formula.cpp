#include <gtest/gtest.h>

#include "flatteam/formula.hpp"
#include "flatteam/parser.hpp"
#include "flatteam/pool.hpp"

using namespace flatteam;

namespace {

std::set<std::string> fv(const char* text) { return free_variables(parse_formula(text)); }

}  // namespace

TEST(FreeVariables, DependenceAtom) { EXPECT_EQ(fv("dep(x; y)"), (std::set<std::string>{"x", "y"})); }

TEST(FreeVariables, FlatBindsNothing) {
  EXPECT_EQ(fv("F anon(x; y)"), (std::set<std::string>{"x", "y"}));
  EXPECT_EQ(fv("neg some F dep(x; y)"), (std::set<std::string>{"x", "y"}));
}

TEST(FreeVariables, QuantifierBinds) { EXPECT_EQ(fv("E x. E(x,y)"), (std::set<std::string>{"y"})); }

TEST(FreeVariables, ConstantsAreNotVariables) {
  EXPECT_EQ(fv("P(#c) & x = #c"), (std::set<std::string>{"x"}));
}

TEST(Parse, GrammarClauses) {
  EXPECT_EQ(parse_formula("dep(x; y)"), dep(vars({"x"}), Term::var("y")));
  EXPECT_EQ(parse_formula("E x. F (anon(; y))"),
            exists("x", flat(anon({}, Term::var("y")))));
  EXPECT_EQ(parse_formula("const(x)"), dep({}, Term::var("x")));
  EXPECT_EQ(parse_formula("nonconst(x)"), anon({}, Term::var("x")));
  EXPECT_EQ(parse_formula("ind(x; y; z)"), ind(vars({"x"}), vars({"y"}), vars({"z"})));
}

TEST(Parse, Precedence) {
  const Formula a = rel("P", vars({"x"})), b = rel("P", vars({"y"})), c = ne();
  EXPECT_EQ(parse_formula("P(x) & P(y) | NE"), disj(conj(a, b), c));
  EXPECT_EQ(parse_formula("P(x) | P(y) vv NE"), bool_or(disj(a, b), c));
  EXPECT_EQ(parse_formula("P(x) => P(y) => NE"), hook(a, hook(b, c)));
  EXPECT_EQ(parse_formula("E x. P(x) & P(y)"), exists("x", conj(a, b)));
  EXPECT_EQ(parse_formula("(E x. P(x)) & P(y)"), conj(exists("x", a), b));
  EXPECT_EQ(parse_formula("F P(x) & NE"), conj(flat(a), c));
}

TEST(Parse, TeamAtomInHookGuardRejected) {
  EXPECT_THROW(parse_formula("inc(x; y) => NE"), ParseError);
  EXPECT_THROW(parse_formula("F P(x) => NE"), ParseError);
}

TEST(Parse, ClassicalNegationGoesToLiterals) {
  EXPECT_EQ(parse_formula("!(P(x) & E y. x = y)"),
            disj(neg_rel("P", vars({"x"})), forall("y", neq(Term::var("x"), Term::var("y")))));
  EXPECT_THROW(parse_formula("!dep(x; y)"), ParseError);
}

TEST(Parse, ErrorsCarryPosition) {
  try {
    parse_formula("dep(x;");
    FAIL();
  } catch (const ParseError& e) {
    EXPECT_EQ(e.position(), 6u);
  }
  EXPECT_THROW(parse_formula("inc(x, y; z)"), ParseError);  // lengths differ
  EXPECT_THROW(parse_formula("P(x) &"), ParseError);
  EXPECT_THROW(parse_formula("P(x))"), ParseError);
}

TEST(Render, Examples) {
  EXPECT_EQ(render(flat(flat(dep(vars({"x"}), Term::var("y"))))), "F F dep(x; y)");
  EXPECT_EQ(render(inc(vars({"x"}), vars({"y"}))), "inc(x; y)");
  const Formula psi = inc(vars({"z"}), vars({"x"}));
  EXPECT_EQ(render(hook(rel("E", vars({"y", "z"})), psi)), "E(y,z) => " + render(psi));
}

TEST(RoundTrip, PoolFormulas) {
  PoolOptions p;
  p.seed = 11;
  p.count = 300;
  p.kinds = all_kinds();
  p.vars = {"x", "y", "z"};
  p.probe_branches = 0;
  for (const Formula& f : generate_pool(p)) {
    const std::string text = render(f);
    EXPECT_EQ(parse_formula(text), f) << text;
    EXPECT_EQ(render(parse_formula(text)), text);
  }
}

TEST(RoundTrip, Constants) {
  const Formula f = conj(rel("R", {Term::constant("c0"), Term::var("x")}),
                         exc({Term::constant("c0")}, vars({"x"})));
  EXPECT_EQ(parse_formula(render(f)), f);
}

TEST(DesugarHook, Examples) {
  const Formula e = rel("E", vars({"y", "z"}));
  const Formula psi = inc(vars({"z"}), vars({"x"}));
  EXPECT_EQ(desugar_hook(hook(e, psi)), disj(neg_rel("E", vars({"y", "z"})), conj(e, psi)));
  const Formula x_eq_y = eq(Term::var("x"), Term::var("y"));
  EXPECT_EQ(desugar_hook(hook(x_eq_y, ne())),
            disj(neq(Term::var("x"), Term::var("y")), conj(x_eq_y, ne())));
  const Formula plain = parse_formula("E x. (dep(x; y) | F NE)");
  EXPECT_EQ(desugar_hook(plain), plain);
}

TEST(DesugarHook, NestedAndFreeVariablesKept) {
  PoolOptions p;
  p.seed = 12;
  p.count = 200;
  p.kinds = all_kinds();
  p.probe_branches = 0;
  for (const Formula& f : generate_pool(p)) {
    const Formula d = desugar_hook(f);
    EXPECT_EQ(free_variables(d), free_variables(f)) << render(f);
    EXPECT_EQ(render(d).find("=>"), std::string::npos) << render(f);
  }
}

TEST(NnfNegate, QuantifiersAndConstants) {
  EXPECT_EQ(nnf_negate(parse_formula("A x. (P(x) | x = #c)")),
            parse_formula("E x. (!P(x) & x != #c)"));
  EXPECT_EQ(nnf_negate(top()), bot());
  EXPECT_THROW(nnf_negate(ne()), FormulaError);
}

TEST(SubstituteRelAtoms, Examples) {
  auto builder = [](const Tuple& ts) { return eq(Term::var("y"), ts[0]); };
  EXPECT_EQ(substitute_rel_atoms(parse_formula("S(x)"), "S", 1, builder), parse_formula("y = x"));
  EXPECT_EQ(substitute_rel_atoms(parse_formula("!S(x)"), "S", 1, builder),
            parse_formula("y != x"));
  const Formula none = parse_formula("E x. (P(x) | x = z)");
  EXPECT_EQ(substitute_rel_atoms(none, "S", 1, builder), none);
  EXPECT_THROW(substitute_rel_atoms(parse_formula("S(x, z)"), "S", 1, builder), FormulaError);
  EXPECT_THROW(substitute_rel_atoms(parse_formula("S(x) & NE"), "S", 1, builder), FormulaError);
}

TEST(Builders, Validation) {
  EXPECT_THROW(inc(vars({"x"}), vars({"y", "z"})), FormulaError);
  EXPECT_THROW(exc(vars({"x", "y"}), vars({"z"})), FormulaError);
  EXPECT_THROW(hook(dep(vars({"x"}), Term::var("y")), top()), FormulaError);
  EXPECT_NO_THROW(ind(vars({"x"}), vars({"y", "z"}), {}));
}

TEST(Builders, TupleEquality) {
  EXPECT_EQ(tuple_eq({}, {}), top());
  EXPECT_EQ(tuple_neq({}, {}), bot());
  EXPECT_EQ(render(tuple_eq(vars({"x", "y"}), vars({"u", "v"}))), "x=u & y=v");
}
