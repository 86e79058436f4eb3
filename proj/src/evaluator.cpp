#include "flatteam/evaluator.hpp"

#include <algorithm>
#include <cstring>

namespace flatteam {

namespace {

constexpr std::uint8_t kUnset = 0xFF;
constexpr std::size_t kTableLimit = 12;    // Or tabulates subteams up to this size
constexpr std::size_t kMemoRows = 16;      // larger teams are not cached
constexpr std::size_t kMemoEntries = 1 << 21;

using Slots = std::array<std::uint8_t, Evaluator::kMaxVariables>;
using Key = std::array<std::uint8_t, Evaluator::kMaxVariables>;

struct TermRef {
  bool constant;
  std::uint8_t value;  // slot, or element when constant
};

struct CNode {
  Kind kind;
  const Relation* rel = nullptr;
  std::vector<std::vector<TermRef>> tuples;
  std::vector<int> kids;  // Hook: guard, body, desugared form
  int slot = -1;          // bound variable of a quantifier
  bool flat = false;
  bool cacheable = false;
};

struct Rows {
  std::uint32_t dom = 0;  // bit per slot
  std::vector<Slots> rows;
};

inline std::uint8_t value_of(const TermRef& t, const Slots& r) {
  return t.constant ? t.value : r[t.value];
}

inline Key key_of(const std::vector<TermRef>& tuple, const Slots& r) {
  Key k;
  k.fill(0);
  for (std::size_t i = 0; i < tuple.size(); ++i) k[i] = value_of(tuple[i], r);
  return k;
}

void sort_unique(std::vector<Slots>& rows) {
  std::sort(rows.begin(), rows.end());
  rows.erase(std::unique(rows.begin(), rows.end()), rows.end());
}

}  // namespace

bool syntactically_flat(const Formula& f) {
  switch (f.kind()) {
    case Kind::RelAtom:
    case Kind::NegRelAtom:
    case Kind::Equal:
    case Kind::NotEqual:
    case Kind::Top:
    case Kind::Bot:
    case Kind::Flat:
      return true;
    case Kind::And:
    case Kind::Or:
      return syntactically_flat(f.left()) && syntactically_flat(f.right());
    case Kind::Hook:
      return syntactically_flat(f.right());
    case Kind::Exists:
    case Kind::Forall:
      return syntactically_flat(f.body());
    default:
      return false;
  }
}

Strategy Strategy::naive() {
  Strategy s;
  s.mode = Mode::Naive;
  s.flat_aware_disjunction = s.hook_forced_split = s.flat_body_existential = s.memoization =
      false;
  return s;
}

Strategy Strategy::optimized() { return Strategy{}; }

std::string Strategy::describe() const {
  if (mode == Mode::Naive) return "naive";
  std::string out = "optimized(";
  auto add = [&](bool on, const char* name) {
    if (!on) return;
    if (out.back() != '(') out += ',';
    out += name;
  };
  add(flat_aware_disjunction, "flat-or");
  add(hook_forced_split, "hook-split");
  add(flat_body_existential, "flat-exists");
  add(memoization, "memo");
  return out + ")";
}

struct Evaluator::Impl {
  Evaluator& ev;
  std::map<std::string, std::uint8_t> slot_of;
  std::vector<CNode> nodes;
  std::unordered_map<const Formula::Node*, int> compiled;
  std::vector<Formula> keep_alive;
  std::unordered_map<std::string, bool> memo;
  std::chrono::steady_clock::time_point deadline;
  std::uint64_t branch_limit = 0;

  explicit Impl(Evaluator& e) : ev(e) {}

  const Structure& S() const { return ev.structure_; }
  bool optimized() const { return ev.strategy_.mode == Strategy::Mode::Optimized; }

  std::uint8_t slot(const std::string& name) {
    auto it = slot_of.find(name);
    if (it != slot_of.end()) return it->second;
    if (slot_of.size() >= kMaxVariables)
      throw EvalError("more than " + std::to_string(kMaxVariables) + " distinct variables");
    const auto s = static_cast<std::uint8_t>(slot_of.size());
    slot_of.emplace(name, s);
    return s;
  }

  std::vector<TermRef> compile_tuple(const Tuple& t) {
    if (t.size() > kMaxVariables) throw EvalError("tuple longer than 16 terms");
    std::vector<TermRef> out;
    for (const Term& term : t) {
      if (term.is_var()) {
        out.push_back({false, slot(term.name)});
      } else {
        auto c = S().constant(term.name);
        if (!c) throw EvalError("unknown constant #" + term.name);
        out.push_back({true, static_cast<std::uint8_t>(*c)});
      }
    }
    return out;
  }

  int compile(const Formula& f) {
    if (auto it = compiled.find(f.id()); it != compiled.end()) return it->second;
    CNode n;
    n.kind = f.kind();
    n.flat = syntactically_flat(f);
    for (const Tuple& t : f.tuples()) n.tuples.push_back(compile_tuple(t));
    if (n.kind == Kind::RelAtom || n.kind == Kind::NegRelAtom) {
      n.rel = S().relation(f.symbol());
      if (!n.rel) throw EvalError("unknown relation " + f.symbol());
      if (n.rel->arity() != f.tuple(0).size())
        throw EvalError("relation " + f.symbol() + " used with arity " +
                        std::to_string(f.tuple(0).size()));
    }
    if (n.kind == Kind::Exists || n.kind == Kind::Forall) n.slot = slot(f.symbol());
    for (const Formula& c : f.children()) n.kids.push_back(compile(c));
    if (n.kind == Kind::Hook) {
      Formula sugar = disj(nnf_negate(f.left()), conj(f.left(), f.right()));
      keep_alive.push_back(sugar);
      n.kids.push_back(compile(sugar));
    }
    switch (n.kind) {
      case Kind::Or:
      case Kind::Hook:
      case Kind::Exists:
      case Kind::Forall:
      case Kind::Flat:
      case Kind::SomeRow:
        n.cacheable = true;
        break;
      default:
        break;
    }
    keep_alive.push_back(f);
    nodes.push_back(std::move(n));
    const int id = static_cast<int>(nodes.size() - 1);
    compiled.emplace(f.id(), id);
    return id;
  }

  void branch() {
    ++ev.stats_.branches;
    if (ev.stats_.branches > branch_limit)
      throw BudgetExceeded("branch budget of " + std::to_string(ev.budget_.max_branches) +
                           " exceeded");
    if ((ev.stats_.branches & 0xFFF) == 0 && std::chrono::steady_clock::now() > deadline)
      throw BudgetExceeded("timeout of " + std::to_string(ev.budget_.timeout.count()) +
                           " ms exceeded");
  }

  void check_rows(std::size_t n) const {
    if (n > ev.budget_.max_team_rows)
      throw BudgetExceeded("team of " + std::to_string(n) + " rows exceeds the row budget");
  }

  // ---------------------------------------------------------- single rows

  bool literal(const CNode& n, const Slots& r) const {
    switch (n.kind) {
      case Kind::RelAtom:
      case Kind::NegRelAtom: {
        const auto& t = n.tuples[0];
        std::array<ElemId, kMaxVariables> vals{};
        for (std::size_t i = 0; i < t.size(); ++i) vals[i] = value_of(t[i], r);
        const bool in = n.rel->contains(std::span<const ElemId>(vals.data(), t.size()));
        return n.kind == Kind::RelAtom ? in : !in;
      }
      case Kind::Equal:
        return value_of(n.tuples[0][0], r) == value_of(n.tuples[0][1], r);
      case Kind::NotEqual:
        return value_of(n.tuples[0][0], r) != value_of(n.tuples[0][1], r);
      case Kind::Top:
        return true;
      case Kind::Bot:
        return false;
      default:
        throw EvalError(std::string("not a literal: ") + kind_name(n.kind));
    }
  }

  // Truth on the singleton team {r}, for syntactically flat nodes.
  bool pointwise(int id, Slots r, std::uint32_t dom) {
    const CNode& n = nodes[id];
    switch (n.kind) {
      case Kind::And:
        return pointwise(n.kids[0], r, dom) && pointwise(n.kids[1], r, dom);
      case Kind::Or:
        return pointwise(n.kids[0], r, dom) || pointwise(n.kids[1], r, dom);
      case Kind::Hook:
        return !pointwise(n.kids[0], r, dom) || pointwise(n.kids[1], r, dom);
      case Kind::Exists:
      case Kind::Forall: {
        const bool want = n.kind == Kind::Exists;
        const std::uint32_t d = dom | (1u << n.slot);
        for (std::size_t m = 0; m < S().size(); ++m) {
          r[n.slot] = static_cast<std::uint8_t>(m);
          if (pointwise(n.kids[0], r, d) == want) return want;
        }
        return !want;
      }
      case Kind::Flat: {
        Rows one{dom, {r}};
        return eval(n.kids[0], one);
      }
      default:
        return literal(n, r);
    }
  }

  // ---------------------------------------------------------- teams

  Rows subteam(const Rows& x, std::uint64_t mask) const {
    Rows y{x.dom, {}};
    for (std::size_t i = 0; i < x.rows.size(); ++i)
      if (mask >> i & 1) y.rows.push_back(x.rows[i]);
    return y;
  }

  Rows duplicate(const Rows& x, int slot) {
    Rows d{x.dom | (1u << slot), {}};
    check_rows(x.rows.size() * S().size());
    d.rows.reserve(x.rows.size() * S().size());
    for (Slots r : x.rows)
      for (std::size_t m = 0; m < S().size(); ++m) {
        r[slot] = static_cast<std::uint8_t>(m);
        d.rows.push_back(r);
      }
    if (x.dom >> slot & 1) sort_unique(d.rows);
    else std::sort(d.rows.begin(), d.rows.end());
    return d;
  }

  std::string memo_key(int id, const Rows& x) const {
    std::string k(sizeof(int) + sizeof(std::uint32_t) + x.rows.size() * sizeof(Slots), '\0');
    char* p = k.data();
    std::memcpy(p, &id, sizeof(int));
    std::memcpy(p + sizeof(int), &x.dom, sizeof(std::uint32_t));
    if (!x.rows.empty())
      std::memcpy(p + sizeof(int) + sizeof(std::uint32_t), x.rows.data(),
                  x.rows.size() * sizeof(Slots));
    return k;
  }

  bool eval(int id, const Rows& x) {
    const CNode& n = nodes[id];
    const bool use_memo = n.cacheable && optimized() && ev.strategy_.memoization &&
                          x.rows.size() <= kMemoRows;
    std::string key;
    if (use_memo) {
      key = memo_key(id, x);
      if (auto it = memo.find(key); it != memo.end()) {
        ++ev.stats_.cache_hits;
        return it->second;
      }
      ++ev.stats_.cache_misses;
    }
    const bool v = eval_uncached(id, x);
    if (use_memo) {
      if (memo.size() >= kMemoEntries) memo.clear();
      memo.emplace(std::move(key), v);
    }
    return v;
  }

  bool eval_uncached(int id, const Rows& x) {
    const CNode& n = nodes[id];
    switch (n.kind) {
      case Kind::RelAtom:
      case Kind::NegRelAtom:
      case Kind::Equal:
      case Kind::NotEqual:
      case Kind::Top:
      case Kind::Bot:
        return std::all_of(x.rows.begin(), x.rows.end(),
                           [&](const Slots& r) { return literal(n, r); });
      case Kind::NE:
        return !x.rows.empty();
      case Kind::Dep:
        return eval_dep(n, x);
      case Kind::Anon:
        return eval_anon(n, x);
      case Kind::Incl:
        return eval_incl(n, x);
      case Kind::Excl:
        return eval_excl(n, x);
      case Kind::Ind:
        return eval_ind(n, x);
      case Kind::And:
        return eval(n.kids[0], x) && eval(n.kids[1], x);
      case Kind::Or:
        return eval_or(n, x);
      case Kind::Hook:
        if (optimized() && ev.strategy_.hook_forced_split) {
          Rows guarded{x.dom, {}};
          for (const Slots& r : x.rows)
            if (pointwise(n.kids[0], r, x.dom)) guarded.rows.push_back(r);
          return eval(n.kids[1], guarded);
        }
        return eval(n.kids[2], x);
      case Kind::BoolOr:
        return eval(n.kids[0], x) || eval(n.kids[1], x);
      case Kind::BoolNeg:
        return !eval(n.kids[0], x);
      case Kind::Exists:
        return eval_exists(n, x);
      case Kind::Forall:
        return eval(n.kids[0], duplicate(x, n.slot));
      case Kind::Flat:
      case Kind::SomeRow: {
        const bool all = n.kind == Kind::Flat;
        for (const Slots& r : x.rows) {
          branch();
          Rows one{x.dom, {r}};
          if (eval(n.kids[0], one) != all) return !all;
        }
        return all;
      }
    }
    throw EvalError("unhandled formula kind");
  }

  // ---------------------------------------------------------- atoms

  bool eval_dep(const CNode& n, const Rows& x) const {
    std::vector<std::pair<Key, std::uint8_t>> v;
    v.reserve(x.rows.size());
    for (const Slots& r : x.rows) v.emplace_back(key_of(n.tuples[0], r), value_of(n.tuples[1][0], r));
    std::sort(v.begin(), v.end());
    for (std::size_t i = 1; i < v.size(); ++i)
      if (v[i].first == v[i - 1].first && v[i].second != v[i - 1].second) return false;
    return true;
  }

  bool eval_anon(const CNode& n, const Rows& x) const {
    std::vector<std::pair<Key, std::uint8_t>> v;
    v.reserve(x.rows.size());
    for (const Slots& r : x.rows) v.emplace_back(key_of(n.tuples[0], r), value_of(n.tuples[1][0], r));
    std::sort(v.begin(), v.end());
    for (std::size_t i = 0; i < v.size();) {
      std::size_t j = i;
      while (j < v.size() && v[j].first == v[i].first) ++j;
      if (v[i].second == v[j - 1].second) return false;  // one target value in the group
      i = j;
    }
    return true;
  }

  bool eval_incl(const CNode& n, const Rows& x) const {
    std::vector<Key> right;
    right.reserve(x.rows.size());
    for (const Slots& r : x.rows) right.push_back(key_of(n.tuples[1], r));
    std::sort(right.begin(), right.end());
    for (const Slots& r : x.rows)
      if (!std::binary_search(right.begin(), right.end(), key_of(n.tuples[0], r))) return false;
    return true;
  }

  bool eval_excl(const CNode& n, const Rows& x) const {
    std::vector<Key> left, right;
    for (const Slots& r : x.rows) {
      left.push_back(key_of(n.tuples[0], r));
      right.push_back(key_of(n.tuples[1], r));
    }
    std::sort(left.begin(), left.end());
    std::sort(right.begin(), right.end());
    auto a = left.begin();
    auto b = right.begin();
    while (a != left.end() && b != right.end()) {
      if (*a == *b) return false;
      if (*a < *b) ++a;
      else ++b;
    }
    return true;
  }

  // Within each condition group the (left, right) pairs must be the full
  // product of the group's left values and right values.
  bool eval_ind(const CNode& n, const Rows& x) const {
    struct Triple {
      Key c, l, r;
      auto operator<=>(const Triple&) const = default;
    };
    std::vector<Triple> v;
    for (const Slots& r : x.rows)
      v.push_back({key_of(n.tuples[0], r), key_of(n.tuples[1], r), key_of(n.tuples[2], r)});
    std::sort(v.begin(), v.end());
    v.erase(std::unique(v.begin(), v.end()), v.end());
    for (std::size_t i = 0; i < v.size();) {
      std::size_t j = i;
      while (j < v.size() && v[j].c == v[i].c) ++j;
      std::vector<Key> ls, rs;
      for (std::size_t k = i; k < j; ++k) {
        ls.push_back(v[k].l);
        rs.push_back(v[k].r);
      }
      std::sort(ls.begin(), ls.end());
      ls.erase(std::unique(ls.begin(), ls.end()), ls.end());
      std::sort(rs.begin(), rs.end());
      rs.erase(std::unique(rs.begin(), rs.end()), rs.end());
      if (ls.size() * rs.size() != j - i) return false;
      i = j;
    }
    return true;
  }

  // ---------------------------------------------------------- disjunction

  // Y | Z == X with Y |= left and Z |= right, trying every Y and then every Z
  // containing X \ Y.
  bool or_naive(int left, int right, const Rows& x) {
    const std::size_t n = x.rows.size();
    if (n > 62) throw BudgetExceeded("disjunction over a team of more than 62 rows");
    const std::uint64_t full = (std::uint64_t{1} << n) - 1;
    for (std::uint64_t y = 0;; ++y) {
      branch();
      if (eval(left, subteam(x, y))) {
        // Z = (X \ Y) + any subset of Y
        for (std::uint64_t extra = y;; extra = (extra - 1) & y) {
          branch();
          if (eval(right, subteam(x, (full & ~y) | extra))) return true;
          if (extra == 0) break;
        }
      }
      if (y == full) break;
    }
    return false;
  }

  // Z ranges over the supersets of `required` inside X.
  bool some_superset(int node, const Rows& x, std::uint64_t required) {
    const std::uint64_t full = (std::uint64_t{1} << x.rows.size()) - 1;
    const std::uint64_t free = full & ~required;
    for (std::uint64_t extra = free;; extra = (extra - 1) & free) {
      branch();
      if (eval(node, subteam(x, required | extra))) return true;
      if (extra == 0) break;
    }
    return false;
  }

  bool eval_or(const CNode& n, const Rows& x) {
    const int left = n.kids[0];
    const int right = n.kids[1];
    if (!optimized()) return or_naive(left, right, x);

    const std::size_t sz = x.rows.size();
    if (ev.strategy_.flat_aware_disjunction) {
      if (n.flat) {
        return std::all_of(x.rows.begin(), x.rows.end(), [&](const Slots& r) {
          return pointwise(left, r, x.dom) || pointwise(right, r, x.dom);
        });
      }
      // A flat side can take every row it accepts; the other side must then
      // cover the rest.
      for (int side = 0; side < 2; ++side) {
        const int flat_kid = side == 0 ? left : right;
        const int other = side == 0 ? right : left;
        if (!nodes[flat_kid].flat || sz > 62) continue;
        std::uint64_t rest = 0;
        for (std::size_t i = 0; i < sz; ++i)
          if (!pointwise(flat_kid, x.rows[i], x.dom)) rest |= std::uint64_t{1} << i;
        return some_superset(other, x, rest);
      }
    }
    if (sz > kTableLimit) return or_naive(left, right, x);

    // Tabulate the right side on every subteam, close it upwards, then look
    // for a left subteam whose complement has a satisfying superset.
    const std::uint64_t count = std::uint64_t{1} << sz;
    const std::uint64_t full = count - 1;
    if (eval(left, x) && eval(right, Rows{x.dom, {}})) return true;
    if (eval(right, x) && eval(left, Rows{x.dom, {}})) return true;
    std::vector<char> up(count);
    for (std::uint64_t z = 0; z < count; ++z) {
      branch();
      up[z] = eval(right, subteam(x, z));
    }
    for (std::size_t b = 0; b < sz; ++b)
      for (std::uint64_t z = 0; z < count; ++z)
        if (!(z >> b & 1)) up[z] = up[z] || up[z | (std::uint64_t{1} << b)];
    for (std::uint64_t y = 0; y < count; ++y) {
      if (!up[full & ~y]) continue;
      branch();
      if (eval(left, subteam(x, y))) return true;
    }
    return false;
  }

  // ---------------------------------------------------------- quantifiers

  // Subteams Y of X[M/v] whose rows, with v forgotten, are exactly X's rows
  // with v forgotten. Chosen per forgotten row as a non-empty set of values.
  bool eval_exists(const CNode& n, const Rows& x) {
    const int body = n.kids[0];
    const int v = n.slot;
    const std::uint32_t dom = x.dom | (1u << v);
    const std::size_t msize = S().size();

    std::vector<Slots> groups;
    groups.reserve(x.rows.size());
    for (Slots r : x.rows) {
      r[v] = kUnset;
      groups.push_back(r);
    }
    sort_unique(groups);
    if (groups.empty()) return eval(body, Rows{dom, {}});
    check_rows(groups.size() * msize);

    const bool shortcut = optimized() && ev.strategy_.flat_body_existential;
    if (shortcut && nodes[body].flat) {
      for (Slots r : groups) {
        bool found = false;
        for (std::size_t m = 0; m < msize && !found; ++m) {
          branch();
          r[v] = static_cast<std::uint8_t>(m);
          found = pointwise(body, r, dom);
        }
        if (!found) return false;
      }
      return true;
    }

    // Candidate values per group. With the shortcut on, values failing a flat
    // conjunct of the body are dropped: no satisfying subteam contains them.
    std::vector<int> flat_conjuncts;
    if (shortcut) collect_flat_conjuncts(body, flat_conjuncts);
    std::vector<std::vector<std::uint8_t>> choices(groups.size());
    for (std::size_t g = 0; g < groups.size(); ++g) {
      Slots r = groups[g];
      for (std::size_t m = 0; m < msize; ++m) {
        r[v] = static_cast<std::uint8_t>(m);
        bool ok = true;
        for (int c : flat_conjuncts)
          if (!pointwise(c, r, dom)) {
            ok = false;
            break;
          }
        if (ok) choices[g].push_back(static_cast<std::uint8_t>(m));
      }
      if (choices[g].empty()) return false;
      if (choices[g].size() > 62)
        throw BudgetExceeded("existential search over more than 62 values");
    }

    // Mixed-radix counter; digit g is a non-empty subset of choices[g].
    std::vector<std::uint64_t> digit(groups.size(), 1);
    Rows y{dom, {}};
    while (true) {
      branch();
      y.rows.clear();
      for (std::size_t g = 0; g < groups.size(); ++g) {
        Slots r = groups[g];
        for (std::size_t k = 0; k < choices[g].size(); ++k)
          if (digit[g] >> k & 1) {
            r[v] = choices[g][k];
            y.rows.push_back(r);
          }
      }
      std::sort(y.rows.begin(), y.rows.end());
      if (eval(body, y)) return true;
      std::size_t g = 0;
      for (; g < groups.size(); ++g) {
        const std::uint64_t top = (std::uint64_t{1} << choices[g].size()) - 1;
        if (digit[g] < top) {
          ++digit[g];
          break;
        }
        digit[g] = 1;
      }
      if (g == groups.size()) return false;
    }
  }

  void collect_flat_conjuncts(int id, std::vector<int>& out) const {
    const CNode& n = nodes[id];
    if (n.kind == Kind::And) {
      collect_flat_conjuncts(n.kids[0], out);
      collect_flat_conjuncts(n.kids[1], out);
    } else if (n.flat) {
      out.push_back(id);
    }
  }

  // ---------------------------------------------------------- entry points

  Rows convert(const Team& t) {
    Rows x;
    std::vector<std::uint8_t> slots;
    for (const auto& v : t.vars()) {
      slots.push_back(slot(v));
      x.dom |= 1u << slots.back();
    }
    for (const Row& r : t.rows()) {
      Slots s;
      s.fill(kUnset);
      for (std::size_t k = 0; k < r.size(); ++k) {
        if (r[k] >= S().size()) throw EvalError("team row outside the domain");
        s[slots[k]] = static_cast<std::uint8_t>(r[k]);
      }
      x.rows.push_back(s);
    }
    sort_unique(x.rows);
    return x;
  }

  void start() {
    deadline = std::chrono::steady_clock::now() + ev.budget_.timeout;
    branch_limit = ev.stats_.branches + ev.budget_.max_branches;
  }
};

Evaluator::Evaluator(const Structure& s, Strategy strategy, EvalBudget budget)
    : structure_(s), strategy_(strategy), budget_(budget), impl_(std::make_unique<Impl>(*this)) {
  if (budget.max_team_rows == 0 || budget.max_branches == 0 || budget.timeout.count() <= 0)
    throw EvalError("evaluation budget entries must be positive");
  if (s.size() >= kUnset) throw EvalError("domain too large for the evaluator");
}

Evaluator::~Evaluator() = default;

void Evaluator::clear_cache() { impl_->memo.clear(); }

bool Evaluator::eval(const Formula& f, const Team& x) {
  for (const auto& v : free_variables(f))
    if (!x.var_index(v)) throw EvalError("unbound variable " + v);
  const int root = impl_->compile(f);
  const Rows rows = impl_->convert(x);
  impl_->start();
  return impl_->eval(root, rows);
}

bool Evaluator::eval_sentence(const Formula& f) {
  const auto fv = free_variables(f);
  if (!fv.empty()) throw EvalError("not a sentence: free variable " + *fv.begin());
  return eval(f, Team::unit());
}

bool Evaluator::eval_tarski(const Formula& f, const Assignment& a) {
  if (!f.is_first_order()) throw EvalError("Tarskian evaluation needs a first-order formula");
  for (const auto& v : free_variables(f))
    if (!a.count(v)) throw EvalError("unbound variable " + v);
  const int root = impl_->compile(f);
  std::vector<std::string> vars;
  Row row;
  for (const auto& [name, e] : a) {
    vars.push_back(name);
    row.push_back(e);
  }
  const Rows x = impl_->convert(Team(vars, {row}));
  impl_->start();
  return impl_->pointwise(root, x.rows[0], x.dom);
}

bool eval(const Structure& s, const Team& x, const Formula& f, Strategy strategy,
          EvalBudget budget) {
  Evaluator ev(s, strategy, budget);
  return ev.eval(f, x);
}

bool eval_sentence(const Structure& s, const Formula& f, Strategy strategy, EvalBudget budget) {
  Evaluator ev(s, strategy, budget);
  return ev.eval_sentence(f);
}

bool eval_tarski(const Structure& s, const Assignment& a, const Formula& f) {
  Evaluator ev(s, Strategy::naive());
  return ev.eval_tarski(f, a);
}

}  // namespace flatteam
