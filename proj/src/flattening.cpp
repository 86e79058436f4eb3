#include "flatteam/flattening.hpp"

#include <algorithm>
#include <set>

#include "flatteam/evaluator.hpp"
#include "flatteam/parser.hpp"

namespace flatteam {

namespace {

Formula rebuild(const Formula& f, std::vector<Formula> kids) {
  Formula::Node n{f.kind(), f.symbol(), f.tuples(), std::move(kids)};
  return Formula(std::move(n));
}

// Axiom 3: same connective skeleton as the reference flattening, except that
// team atoms may be replaced by any first-order formula.
bool same_skeleton(const Formula& f, const Formula& cand) {
  if (f.is_team_atom()) return cand.is_first_order();
  if (f.kind() == Kind::Flat) return same_skeleton(f.body(), cand);
  if (f.kind() != cand.kind() || f.symbol() != cand.symbol() || f.tuples() != cand.tuples() ||
      f.children().size() != cand.children().size())
    return false;
  for (std::size_t i = 0; i < f.children().size(); ++i)
    if (!same_skeleton(f.child(i), cand.child(i))) return false;
  return true;
}

}  // namespace

Formula flatten(const Formula& f, ExclusionFlattening exc) {
  switch (f.kind()) {
    case Kind::Dep:
    case Kind::Anon:
    case Kind::Incl:
    case Kind::Ind:
      return top();
    case Kind::Excl:
      return exc == ExclusionFlattening::Top ? top() : tuple_neq(f.tuple(0), f.tuple(1));
    case Kind::Flat:
      return flatten(f.body(), exc);
    case Kind::BoolNeg:
    case Kind::BoolOr:
    case Kind::SomeRow:
      throw FormulaError(std::string("flattening is undefined for ") + kind_name(f.kind()));
    default:
      break;
  }
  if (f.children().empty()) return f;
  std::vector<Formula> kids;
  for (const Formula& c : f.children()) kids.push_back(flatten(c, exc));
  return rebuild(f, std::move(kids));
}

Formula simplify_F(const Formula& f) {
  std::vector<Formula> kids;
  for (const Formula& c : f.children()) kids.push_back(simplify_F(c));
  const Formula g = f.children().empty() ? f : rebuild(f, std::move(kids));
  if (g.kind() != Kind::Flat) return g;

  const Formula& b = g.body();
  switch (b.kind()) {
    case Kind::Dep:
    case Kind::Ind:
      return top();
    case Kind::Anon:
      return bot();
    case Kind::Incl:
      return tuple_eq(b.tuple(0), b.tuple(1));
    case Kind::Excl:
      return tuple_neq(b.tuple(0), b.tuple(1));
    case Kind::Flat:
      return b;
    case Kind::And:
      return conj(simplify_F(flat(b.left())), simplify_F(flat(b.right())));
    default:
      break;
  }
  if (b.is_first_order()) return b;
  return g;
}

PropertyReport verify_flattening_axioms(const Formula& f, const Formula& candidate,
                                        const Universe& u, const CheckOptions& opts) {
  const auto fv = free_variables(f);
  for (const auto& v : free_variables(candidate))
    if (!fv.count(v))
      throw FormulaError("candidate flattening has extra free variable " + v);

  PropertyReport r = entails(f, candidate, u, opts);
  if (r.refuted()) {
    r.detail = "axiom 1 (entailment) fails: " + r.detail;
    return r;
  }
  r = is_flat(candidate, u, opts);
  if (r.refuted()) {
    r.detail = "axiom 2 (flatness) fails: " + r.detail;
    return r;
  }
  if (!same_skeleton(f, candidate)) {
    r.verdict = PropertyReport::Verdict::Counterexample;
    r.detail = "axiom 3 (homomorphic shape) fails: " + render(candidate) +
               " does not follow the connectives of " + render(flatten(f));
  }
  return r;
}

Formula translate_F_case(const Formula& psi_star, const std::vector<std::string>& xs,
                         const std::string& r_name, const std::vector<std::string>& ys,
                         const std::string& s_name) {
  if (xs.size() != ys.size())
    throw FormulaError("translation needs as many fresh variables as xs");
  if (!psi_star.is_first_order())
    throw FormulaError("translation body must be first-order");
  const auto used = all_variables(psi_star);
  std::set<std::string> seen;
  for (const auto& y : ys) {
    if (used.count(y)) throw FormulaError("variable " + y + " would be captured");
    if (!seen.insert(y).second) throw FormulaError("variable " + y + " repeated");
  }
  Tuple yt;
  for (const auto& y : ys) yt.push_back(Term::var(y));
  const Formula theta = substitute_rel_atoms(psi_star, s_name, ys.size(),
                                             [&](const Tuple& ts) { return tuple_eq(yt, ts); });
  Formula out = disj(neg_rel(r_name, yt), theta);
  for (auto it = ys.rbegin(); it != ys.rend(); ++it) out = forall(*it, out);
  return out;
}

PropertyReport check_translation_biconditional(const Structure& s, const Team& x,
                                               const Formula& psi, const Formula& psi_star,
                                               const std::vector<std::string>& xs,
                                               const CheckOptions& opts) {
  std::string r_name = "R";
  while (s.relation(r_name)) r_name += "_";
  std::set<std::string> taken = all_variables(psi_star);
  taken.insert(xs.begin(), xs.end());
  taken.insert(x.vars().begin(), x.vars().end());
  std::vector<std::string> ys;
  for (std::size_t i = 0; ys.size() < xs.size(); ++i) {
    const std::string y = "y" + std::to_string(i);
    if (!taken.count(y)) ys.push_back(y);
  }
  const Formula phi_star = translate_F_case(psi_star, xs, r_name, ys);

  Structure ext = s;
  ext.add_relation(r_name, xs.size());
  for (const ElemTuple& t : project_relation(x, xs)) ext.add_tuple(r_name, t);

  PropertyReport r;
  r.universe = "one structure, one team of " + std::to_string(x.size()) + " rows";
  const bool left = eval(s, x, flat(psi), opts.strategy, opts.budget);
  Evaluator ev(ext, Strategy::naive());
  bool right = true;
  std::size_t failing = 0;
  for (std::size_t i = 0; i < x.size() && right; ++i)
    if (!ev.eval_tarski(phi_star, x.assignment(i))) {
      right = false;
      failing = i;
    }
  if (left != right) {
    r.verdict = PropertyReport::Verdict::Counterexample;
    r.teams = {x};
    r.detail = "F " + render(psi) + (left ? " holds" : " fails") + " but " + render(phi_star) +
               (right ? " holds at every row" : " fails at row " + std::to_string(failing)) +
               " of " + describe_team(x, s);
  } else {
    r.detail = std::string("both sides ") + (left ? "true" : "false");
  }
  return r;
}

}  // namespace flatteam
