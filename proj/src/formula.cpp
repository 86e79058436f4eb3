#include "flatteam/formula.hpp"

#include <algorithm>

namespace flatteam {

Tuple vars(std::initializer_list<const char*> names) {
  Tuple t;
  for (const char* n : names) t.push_back(Term::var(n));
  return t;
}

const char* kind_name(Kind k) {
  switch (k) {
    case Kind::RelAtom: return "RelAtom";
    case Kind::NegRelAtom: return "NegRelAtom";
    case Kind::Equal: return "Equal";
    case Kind::NotEqual: return "NotEqual";
    case Kind::Top: return "Top";
    case Kind::Bot: return "Bot";
    case Kind::NE: return "NE";
    case Kind::Dep: return "Dep";
    case Kind::Anon: return "Anon";
    case Kind::Incl: return "Incl";
    case Kind::Excl: return "Excl";
    case Kind::Ind: return "Ind";
    case Kind::And: return "And";
    case Kind::Or: return "Or";
    case Kind::Hook: return "Hook";
    case Kind::BoolOr: return "BoolOr";
    case Kind::BoolNeg: return "BoolNeg";
    case Kind::Exists: return "Exists";
    case Kind::Forall: return "Forall";
    case Kind::Flat: return "Flat";
    case Kind::SomeRow: return "SomeRow";
  }
  return "?";
}

Formula::Formula(Node node) : node_(std::make_shared<const Node>(std::move(node))) {}

bool Formula::is_literal() const {
  switch (kind()) {
    case Kind::RelAtom:
    case Kind::NegRelAtom:
    case Kind::Equal:
    case Kind::NotEqual:
    case Kind::Top:
    case Kind::Bot:
      return true;
    default:
      return false;
  }
}

bool Formula::is_team_atom() const {
  switch (kind()) {
    case Kind::NE:
    case Kind::Dep:
    case Kind::Anon:
    case Kind::Incl:
    case Kind::Excl:
    case Kind::Ind:
      return true;
    default:
      return false;
  }
}

bool Formula::is_first_order() const {
  if (is_literal()) return true;
  switch (kind()) {
    case Kind::And:
    case Kind::Or:
      return left().is_first_order() && right().is_first_order();
    case Kind::Exists:
    case Kind::Forall:
      return body().is_first_order();
    default:
      return false;
  }
}

bool operator==(const Formula& a, const Formula& b) {
  if (a.node_ == b.node_) return true;
  const auto& x = *a.node_;
  const auto& y = *b.node_;
  return x.kind == y.kind && x.symbol == y.symbol && x.tuples == y.tuples &&
         x.children == y.children;
}

namespace {

Formula make(Kind k, std::string symbol, std::vector<Tuple> tuples,
             std::vector<Formula> children) {
  return Formula(Formula::Node{k, std::move(symbol), std::move(tuples),
                               std::move(children)});
}

}  // namespace

Formula rel(std::string name, Tuple args) {
  return make(Kind::RelAtom, std::move(name), {std::move(args)}, {});
}

Formula neg_rel(std::string name, Tuple args) {
  return make(Kind::NegRelAtom, std::move(name), {std::move(args)}, {});
}

Formula eq(Term a, Term b) {
  return make(Kind::Equal, {}, {{std::move(a), std::move(b)}}, {});
}

Formula neq(Term a, Term b) {
  return make(Kind::NotEqual, {}, {{std::move(a), std::move(b)}}, {});
}

Formula top() { return make(Kind::Top, {}, {}, {}); }
Formula bot() { return make(Kind::Bot, {}, {}, {}); }
Formula ne() { return make(Kind::NE, {}, {}, {}); }

Formula dep(Tuple xs, Term y) {
  return make(Kind::Dep, {}, {std::move(xs), {std::move(y)}}, {});
}

Formula anon(Tuple xs, Term y) {
  return make(Kind::Anon, {}, {std::move(xs), {std::move(y)}}, {});
}

Formula inc(Tuple xs, Tuple ys) {
  if (xs.size() != ys.size())
    throw FormulaError("inclusion atom needs tuples of equal length");
  return make(Kind::Incl, {}, {std::move(xs), std::move(ys)}, {});
}

Formula exc(Tuple xs, Tuple ys) {
  if (xs.size() != ys.size())
    throw FormulaError("exclusion atom needs tuples of equal length");
  return make(Kind::Excl, {}, {std::move(xs), std::move(ys)}, {});
}

Formula ind(Tuple cond, Tuple left, Tuple right) {
  return make(Kind::Ind, {}, {std::move(cond), std::move(left), std::move(right)}, {});
}

Formula conj(Formula a, Formula b) {
  return make(Kind::And, {}, {}, {std::move(a), std::move(b)});
}

Formula disj(Formula a, Formula b) {
  return make(Kind::Or, {}, {}, {std::move(a), std::move(b)});
}

Formula hook(Formula guard, Formula body) {
  if (!guard.is_first_order())
    throw FormulaError("team atom inside hook guard: the guard must be first-order");
  return make(Kind::Hook, {}, {}, {std::move(guard), std::move(body)});
}

Formula bool_or(Formula a, Formula b) {
  return make(Kind::BoolOr, {}, {}, {std::move(a), std::move(b)});
}

Formula bool_neg(Formula f) { return make(Kind::BoolNeg, {}, {}, {std::move(f)}); }

Formula exists(std::string var, Formula body) {
  return make(Kind::Exists, std::move(var), {}, {std::move(body)});
}

Formula forall(std::string var, Formula body) {
  return make(Kind::Forall, std::move(var), {}, {std::move(body)});
}

Formula flat(Formula f) { return make(Kind::Flat, {}, {}, {std::move(f)}); }
Formula some_row(Formula f) { return make(Kind::SomeRow, {}, {}, {std::move(f)}); }

Formula tuple_eq(const Tuple& a, const Tuple& b) {
  if (a.size() != b.size()) throw FormulaError("tuple equality needs equal lengths");
  if (a.empty()) return top();
  Formula out = eq(a[0], b[0]);
  for (std::size_t i = 1; i < a.size(); ++i) out = conj(out, eq(a[i], b[i]));
  return out;
}

Formula tuple_neq(const Tuple& a, const Tuple& b) {
  if (a.size() != b.size()) throw FormulaError("tuple inequality needs equal lengths");
  if (a.empty()) return bot();
  Formula out = neq(a[0], b[0]);
  for (std::size_t i = 1; i < a.size(); ++i) out = disj(out, neq(a[i], b[i]));
  return out;
}

namespace {

void collect_free(const Formula& f, std::set<std::string>& bound,
                  std::set<std::string>& out) {
  for (const Tuple& t : f.tuples())
    for (const Term& term : t)
      if (term.is_var() && !bound.count(term.name)) out.insert(term.name);
  if (f.kind() == Kind::Exists || f.kind() == Kind::Forall) {
    const bool fresh = bound.insert(f.symbol()).second;
    collect_free(f.body(), bound, out);
    if (fresh) bound.erase(f.symbol());
    return;
  }
  for (const Formula& c : f.children()) collect_free(c, bound, out);
}

}  // namespace

std::set<std::string> free_variables(const Formula& f) {
  std::set<std::string> bound, out;
  collect_free(f, bound, out);
  return out;
}

std::set<std::string> all_variables(const Formula& f) {
  std::set<std::string> out;
  std::function<void(const Formula&)> walk = [&](const Formula& g) {
    for (const Tuple& t : g.tuples())
      for (const Term& term : t)
        if (term.is_var()) out.insert(term.name);
    if (g.kind() == Kind::Exists || g.kind() == Kind::Forall) out.insert(g.symbol());
    for (const Formula& c : g.children()) walk(c);
  };
  walk(f);
  return out;
}

Formula nnf_negate(const Formula& f) {
  switch (f.kind()) {
    case Kind::RelAtom: return neg_rel(f.symbol(), f.tuple(0));
    case Kind::NegRelAtom: return rel(f.symbol(), f.tuple(0));
    case Kind::Equal: return neq(f.tuple(0)[0], f.tuple(0)[1]);
    case Kind::NotEqual: return eq(f.tuple(0)[0], f.tuple(0)[1]);
    case Kind::Top: return bot();
    case Kind::Bot: return top();
    case Kind::And: return disj(nnf_negate(f.left()), nnf_negate(f.right()));
    case Kind::Or: return conj(nnf_negate(f.left()), nnf_negate(f.right()));
    case Kind::Exists: return forall(f.symbol(), nnf_negate(f.body()));
    case Kind::Forall: return exists(f.symbol(), nnf_negate(f.body()));
    default:
      throw FormulaError(std::string("classical negation is only defined on "
                                     "first-order formulas, found ") +
                         kind_name(f.kind()));
  }
}

namespace {

Formula rebuild(const Formula& f, std::vector<Formula> children) {
  Formula::Node n{f.kind(), f.symbol(), f.tuples(), std::move(children)};
  return Formula(std::move(n));
}

}  // namespace

Formula desugar_hook(const Formula& f) {
  if (f.children().empty()) return f;
  std::vector<Formula> kids;
  kids.reserve(f.children().size());
  for (const Formula& c : f.children()) kids.push_back(desugar_hook(c));
  if (f.kind() == Kind::Hook) {
    const Formula& guard = kids[0];
    return disj(nnf_negate(guard), conj(guard, kids[1]));
  }
  return rebuild(f, std::move(kids));
}

Formula substitute_rel_atoms(const Formula& f, const std::string& rel_name,
                             std::size_t arity,
                             const std::function<Formula(const Tuple&)>& builder) {
  if (!f.is_first_order())
    throw FormulaError("relation substitution requires a first-order formula");
  std::function<Formula(const Formula&)> go = [&](const Formula& g) -> Formula {
    if ((g.kind() == Kind::RelAtom || g.kind() == Kind::NegRelAtom) &&
        g.symbol() == rel_name) {
      if (g.tuple(0).size() != arity)
        throw FormulaError("arity mismatch: " + rel_name + " used with " +
                           std::to_string(g.tuple(0).size()) + " arguments, expected " +
                           std::to_string(arity));
      Formula replacement = builder(g.tuple(0));
      if (!replacement.is_first_order())
        throw FormulaError("relation substitution must produce a first-order formula");
      return g.kind() == Kind::RelAtom ? replacement : nnf_negate(replacement);
    }
    if (g.children().empty()) return g;
    std::vector<Formula> kids;
    for (const Formula& c : g.children()) kids.push_back(go(c));
    return rebuild(g, std::move(kids));
  };
  return go(f);
}

std::size_t formula_size(const Formula& f) {
  std::size_t n = 1;
  for (const Formula& c : f.children()) n += formula_size(c);
  return n;
}

std::size_t formula_depth(const Formula& f) {
  std::size_t d = 0;
  for (const Formula& c : f.children()) d = std::max(d, formula_depth(c));
  return d + 1;
}

}  // namespace flatteam
