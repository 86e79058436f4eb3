#include "flatteam/pool.hpp"

#include <algorithm>
#include <cmath>

#include "flatteam/evaluator.hpp"
#include "flatteam/parser.hpp"

namespace flatteam {

namespace {

constexpr Kind kLeafKinds[] = {Kind::RelAtom, Kind::NegRelAtom, Kind::Equal, Kind::NotEqual,
                               Kind::Top,     Kind::Bot,        Kind::NE,    Kind::Dep,
                               Kind::Anon,    Kind::Incl,       Kind::Excl,  Kind::Ind};
constexpr Kind kInnerKinds[] = {Kind::And,     Kind::Or,     Kind::Hook,
                                Kind::BoolOr,  Kind::BoolNeg, Kind::Exists,
                                Kind::Forall,  Kind::Flat,   Kind::SomeRow};

class Generator {
 public:
  explicit Generator(const PoolOptions& o) : opts_(o), rng_(o.seed) {
    const std::set<Kind> kinds = o.kinds.empty() ? all_kinds() : o.kinds;
    for (Kind k : kLeafKinds)
      if (kinds.count(k) && (o.relations.size() || (k != Kind::RelAtom && k != Kind::NegRelAtom)))
        leaves_.push_back(k);
    for (Kind k : kInnerKinds)
      if (kinds.count(k)) inner_.push_back(k);
    for (Kind k : {Kind::RelAtom, Kind::NegRelAtom, Kind::Equal, Kind::NotEqual})
      if (std::find(leaves_.begin(), leaves_.end(), k) != leaves_.end()) fo_leaves_.push_back(k);
    if (leaves_.empty()) throw FormulaError("formula pool has no leaf kinds");
    if (opts_.vars.empty()) throw FormulaError("formula pool needs variables");
  }

  Formula formula(std::size_t depth) {
    if (depth <= 1 || inner_.empty() || pick(10) < 3) return leaf(pick_of(leaves_));
    const Kind k = pick_of(inner_);
    switch (k) {
      case Kind::And: return conj(formula(depth - 1), formula(depth - 1));
      case Kind::Or: return disj(formula(depth - 1), formula(depth - 1));
      case Kind::BoolOr: return bool_or(formula(depth - 1), formula(depth - 1));
      case Kind::BoolNeg: return bool_neg(formula(depth - 1));
      case Kind::Flat: return flat(formula(depth - 1));
      case Kind::SomeRow: return some_row(formula(depth - 1));
      case Kind::Exists: return exists(var().name, formula(depth - 1));
      case Kind::Forall: return forall(var().name, formula(depth - 1));
      case Kind::Hook: return hook(guard(std::min<std::size_t>(2, depth - 1)), formula(depth - 1));
      default: break;
    }
    throw FormulaError("unexpected kind in formula pool");
  }

 private:
  std::size_t pick(std::size_t n) { return std::uniform_int_distribution<std::size_t>(0, n - 1)(rng_); }
  template <class T>
  const T& pick_of(const std::vector<T>& v) { return v[pick(v.size())]; }

  Term var() { return Term::var(pick_of(opts_.vars)); }
  Tuple tuple(std::size_t len) {
    Tuple t;
    for (std::size_t i = 0; i < len; ++i) t.push_back(var());
    return t;
  }
  // Mostly unary, sometimes empty or binary.
  std::size_t atom_len() {
    if (opts_.unary_atoms) return 1;
    const std::size_t r = pick(6);
    return r == 0 ? 0 : r == 5 ? 2 : 1;
  }

  Formula guard(std::size_t depth) {
    if (fo_leaves_.empty()) return eq(var(), var());
    if (depth <= 1 || pick(3) == 0) return leaf(pick_of(fo_leaves_));
    return pick(2) ? conj(guard(depth - 1), guard(depth - 1)) : disj(guard(depth - 1), guard(depth - 1));
  }

  Formula leaf(Kind k) {
    switch (k) {
      case Kind::RelAtom:
      case Kind::NegRelAtom: {
        const auto& [name, arity] = pick_of(opts_.relations);
        return k == Kind::RelAtom ? rel(name, tuple(arity)) : neg_rel(name, tuple(arity));
      }
      case Kind::Equal: return eq(var(), var());
      case Kind::NotEqual: return neq(var(), var());
      case Kind::Top: return top();
      case Kind::Bot: return bot();
      case Kind::NE: return ne();
      case Kind::Dep: return dep(tuple(atom_len()), var());
      case Kind::Anon: return anon(tuple(atom_len()), var());
      case Kind::Incl:
      case Kind::Excl: {
        const std::size_t len = std::max<std::size_t>(1, atom_len());
        return k == Kind::Incl ? inc(tuple(len), tuple(len)) : exc(tuple(len), tuple(len));
      }
      case Kind::Ind: {
        const std::size_t c = opts_.unary_atoms ? 1 : pick(2);
        return ind(tuple(c), tuple(1), tuple(1));
      }
      default: break;
    }
    throw FormulaError("unexpected leaf kind in formula pool");
  }

  const PoolOptions& opts_;
  std::mt19937_64 rng_;
  std::vector<Kind> leaves_, inner_, fo_leaves_;
};

double cost(const Formula& f, double n, double d, double cap) {
  switch (f.kind()) {
    case Kind::And:
    case Kind::BoolOr:
      return cost(f.left(), n, d, cap) + cost(f.right(), n, d, cap);
    case Kind::BoolNeg:
      return cost(f.body(), n, d, cap);
    case Kind::Or:
      return std::pow(2.0, n) * cost(f.left(), n, d, cap) +
             std::pow(3.0, n) * cost(f.right(), n, d, cap);
    case Kind::Hook:
      return std::pow(2.0, n) * cost(f.left(), n, d, cap) +
             std::pow(3.0, n) * (cost(f.left(), n, d, cap) + cost(f.right(), n, d, cap));
    case Kind::Exists: {
      const double groups = std::max(1.0, std::floor(n / d));
      return std::pow(std::pow(2.0, d) - 1, groups) *
             cost(f.body(), std::min(groups * d, cap), d, cap);
    }
    case Kind::Forall:
      return cost(f.body(), std::min(n * d, cap), d, cap);
    case Kind::Flat:
    case Kind::SomeRow:
      return n * (1 + cost(f.body(), 1, d, cap));
    default:
      return n + 1;
  }
}

}  // namespace

std::set<Kind> all_kinds() {
  std::set<Kind> out(std::begin(kLeafKinds), std::end(kLeafKinds));
  out.insert(std::begin(kInnerKinds), std::end(kInnerKinds));
  return out;
}

std::set<Kind> flattenable_kinds() {
  std::set<Kind> out = all_kinds();
  out.erase(Kind::BoolNeg);
  out.erase(Kind::BoolOr);
  out.erase(Kind::SomeRow);
  return out;
}

double naive_cost(const Formula& f, std::size_t rows, std::size_t domain) {
  return cost(f, static_cast<double>(rows), static_cast<double>(domain),
              static_cast<double>(rows));
}

namespace {

// Three elements, each relation holding roughly half of its tuples.
Structure probe_structure(const Signature& sig) {
  Structure s({"a", "b", "c"});
  for (std::size_t r = 0; r < sig.size(); ++r) {
    std::vector<ElemTuple> members;
    std::size_t i = r;
    for (const Row& t : all_rows(s, sig[r].second))
      if (i++ % 2 == 0) members.push_back(t);
    s.add_relation(sig[r].first, sig[r].second, members);
  }
  return s;
}

}  // namespace

std::vector<Formula> generate_pool(const PoolOptions& opts) {
  Generator gen(opts);
  const Structure probe = probe_structure(opts.relations);
  const Team full(opts.vars, all_rows(probe, opts.vars.size()));
  EvalBudget budget;
  budget.max_branches = opts.probe_branches;
  std::vector<Formula> out;
  std::set<std::string> seen;
  const std::size_t max_tries = 2000 + opts.count * 400;
  for (std::size_t tries = 0; out.size() < opts.count; ++tries) {
    if (tries >= max_tries)
      throw FormulaError("formula pool: only " + std::to_string(out.size()) + " of " +
                         std::to_string(opts.count) + " formulas found");
    Formula f = gen.formula(opts.max_depth);
    if (naive_cost(f, opts.max_rows) > opts.max_cost) continue;
    if (!seen.insert(render(f)).second) continue;
    if (opts.probe_branches) {
      try {
        Evaluator ev(probe, Strategy::naive(), budget);
        ev.eval(f, full);
      } catch (const BudgetExceeded&) {
        continue;
      }
    }
    out.push_back(std::move(f));
  }
  return out;
}

}  // namespace flatteam
