// Formulas of first-order team logic: literals, team atoms, connectives,
// quantifiers and the flattening operator.

#ifndef FLATTEAM_FORMULA_HPP
#define FLATTEAM_FORMULA_HPP

#include <functional>
#include <memory>
#include <set>
#include <stdexcept>
#include <string>
#include <vector>

namespace flatteam {

class FormulaError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Variables and constant symbols live in disjoint namespaces; the concrete
// syntax marks constants with a leading '#'.
struct Term {
  enum class Kind { Variable, Constant };

  Kind kind = Kind::Variable;
  std::string name;

  static Term var(std::string n) { return {Kind::Variable, std::move(n)}; }
  static Term constant(std::string n) { return {Kind::Constant, std::move(n)}; }

  bool is_var() const { return kind == Kind::Variable; }

  friend bool operator==(const Term&, const Term&) = default;
  friend auto operator<=>(const Term&, const Term&) = default;
};

using Tuple = std::vector<Term>;

Tuple vars(std::initializer_list<const char*> names);

enum class Kind {
  RelAtom,     // R(t..)
  NegRelAtom,  // !R(t..)
  Equal,       // t = t
  NotEqual,    // t != t
  Top,
  Bot,
  NE,
  Dep,     // dep(xs; y)
  Anon,    // anon(xs; y)
  Incl,    // inc(xs; ys)
  Excl,    // exc(xs; ys)
  Ind,     // ind(cond; left; right), i.e. left is independent of right given cond
  And,
  Or,
  Hook,    // first-order guard => team formula
  BoolOr,  // vv
  BoolNeg, // neg
  Exists,
  Forall,
  Flat,    // F
  SomeRow, // some
};

const char* kind_name(Kind k);

// Immutable formula tree with shared subterms. Copies are cheap.
//
// Tuple layout per kind:
//   RelAtom/NegRelAtom  tuples[0] = arguments, symbol = relation name
//   Equal/NotEqual      tuples[0] = {lhs, rhs}
//   Dep/Anon            tuples[0] = determining tuple, tuples[1] = {target}
//   Incl/Excl           tuples[0], tuples[1] of equal length
//   Ind                 tuples[0] = condition, tuples[1], tuples[2]
//   Exists/Forall       symbol = bound variable
class Formula {
 public:
  struct Node {
    Kind kind;
    std::string symbol;
    std::vector<Tuple> tuples;
    std::vector<Formula> children;
  };

  explicit Formula(Node node);

  Kind kind() const { return node_->kind; }
  const std::string& symbol() const { return node_->symbol; }
  const std::vector<Tuple>& tuples() const { return node_->tuples; }
  const Tuple& tuple(std::size_t i) const { return node_->tuples.at(i); }
  const std::vector<Formula>& children() const { return node_->children; }
  const Formula& child(std::size_t i) const { return node_->children.at(i); }
  const Formula& left() const { return child(0); }
  const Formula& right() const { return child(1); }
  const Formula& body() const { return child(0); }

  // Stable address of the shared node; used as a cache key.
  const Node* id() const { return node_.get(); }

  bool is_literal() const;
  bool is_team_atom() const;
  // Literals, TOP/BOT, &, |, E, A only. Hook guards must be of this shape.
  bool is_first_order() const;

  friend bool operator==(const Formula& a, const Formula& b);

 private:
  std::shared_ptr<const Node> node_;
};

// Builders. Hook rejects guards that are not first-order; Incl/Excl reject
// tuples of different lengths.
Formula rel(std::string name, Tuple args);
Formula neg_rel(std::string name, Tuple args);
Formula eq(Term a, Term b);
Formula neq(Term a, Term b);
Formula top();
Formula bot();
Formula ne();
Formula dep(Tuple xs, Term y);
Formula anon(Tuple xs, Term y);
Formula inc(Tuple xs, Tuple ys);
Formula exc(Tuple xs, Tuple ys);
Formula ind(Tuple cond, Tuple left, Tuple right);
Formula conj(Formula a, Formula b);
Formula disj(Formula a, Formula b);
Formula hook(Formula guard, Formula body);
Formula bool_or(Formula a, Formula b);
Formula bool_neg(Formula f);
Formula exists(std::string var, Formula body);
Formula forall(std::string var, Formula body);
Formula flat(Formula f);
Formula some_row(Formula f);

// Conjunction of componentwise equalities (TOP for empty tuples) and its
// negation as a disjunction of inequalities (BOT for empty tuples).
Formula tuple_eq(const Tuple& a, const Tuple& b);
Formula tuple_neq(const Tuple& a, const Tuple& b);

std::set<std::string> free_variables(const Formula& f);
// Every variable occurring in f, bound or free.
std::set<std::string> all_variables(const Formula& f);

// Classical negation of a first-order formula, pushed to the literals.
Formula nnf_negate(const Formula& f);

// Replaces every hook a => p by (~a) | (a & p), with ~a in negation normal form.
Formula desugar_hook(const Formula& f);

// Replaces each occurrence of relation `rel_name` by builder(args); negated
// occurrences become nnf_negate(builder(args)). Requires first-order input.
Formula substitute_rel_atoms(const Formula& f, const std::string& rel_name,
                             std::size_t arity,
                             const std::function<Formula(const Tuple&)>& builder);

std::size_t formula_size(const Formula& f);
std::size_t formula_depth(const Formula& f);

}  // namespace flatteam

#endif  // FLATTEAM_FORMULA_HPP
