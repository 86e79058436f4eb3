#include "oracle.hpp"

#include <algorithm>
#include <functional>
#include <numeric>
#include <stdexcept>

namespace oracle {

using namespace flatteam;

Rows to_rows(const Team& x) {
  Rows out;
  for (std::size_t i = 0; i < x.size(); ++i) out.insert(x.assignment(i));
  return out;
}

Team to_team(const Rows& rows, const std::vector<std::string>& vars) {
  std::vector<Row> out;
  for (const Assignment& a : rows) {
    Row r;
    for (const auto& v : vars) r.push_back(a.at(v));
    out.push_back(r);
  }
  return Team(vars, out);
}

std::vector<Rows> all_teams(const Structure& s, const std::vector<std::string>& vars) {
  std::vector<Assignment> points(1);
  for (const auto& v : vars) {
    std::vector<Assignment> next;
    for (const Assignment& a : points)
      for (ElemId m = 0; m < s.size(); ++m) {
        Assignment b = a;
        b[v] = m;
        next.push_back(b);
      }
    points = next;
  }
  std::vector<Rows> out;
  for (std::size_t mask = 0; mask < (std::size_t{1} << points.size()); ++mask) {
    Rows r;
    for (std::size_t i = 0; i < points.size(); ++i)
      if (mask >> i & 1) r.insert(points[i]);
    out.push_back(r);
  }
  return out;
}

namespace {

ElemId value(const Structure& s, const Assignment& a, const Term& t) {
  if (t.is_var()) {
    auto it = a.find(t.name);
    if (it == a.end()) throw std::runtime_error("oracle: unbound " + t.name);
    return it->second;
  }
  return s.constant(t.name).value();
}

std::vector<ElemId> values(const Structure& s, const Assignment& a, const Tuple& ts) {
  std::vector<ElemId> out;
  for (const Term& t : ts) out.push_back(value(s, a, t));
  return out;
}

bool holds_rel(const Structure& s, const Assignment& a, const Formula& f) {
  const auto v = values(s, a, f.tuple(0));
  const auto& tuples = s.relation(f.symbol())->tuples();
  return std::find(tuples.begin(), tuples.end(), v) != tuples.end();
}

// Every function from rows to non-empty value sets, as supplemented teams.
void each_supplement(const Structure& s, const Rows& x, const std::string& v,
                     const std::function<bool(const Rows&)>& visit, bool& found) {
  const std::vector<Assignment> rows(x.begin(), x.end());
  const std::size_t subsets = (std::size_t{1} << s.size()) - 1;  // non-empty
  std::vector<std::size_t> choice(rows.size(), 1);
  while (!found) {
    Rows y;
    for (std::size_t i = 0; i < rows.size(); ++i)
      for (ElemId m = 0; m < s.size(); ++m)
        if (choice[i] >> m & 1) {
          Assignment b = rows[i];
          b[v] = m;
          y.insert(b);
        }
    if (visit(y)) {
      found = true;
      return;
    }
    std::size_t i = 0;
    while (i < choice.size() && choice[i] == subsets) choice[i++] = 1;
    if (i == choice.size()) return;
    ++choice[i];
  }
}

}  // namespace

bool tarski(const Structure& s, const Assignment& a, const Formula& f) {
  switch (f.kind()) {
    case Kind::RelAtom: return holds_rel(s, a, f);
    case Kind::NegRelAtom: return !holds_rel(s, a, f);
    case Kind::Equal: return value(s, a, f.tuple(0)[0]) == value(s, a, f.tuple(0)[1]);
    case Kind::NotEqual: return value(s, a, f.tuple(0)[0]) != value(s, a, f.tuple(0)[1]);
    case Kind::Top: return true;
    case Kind::Bot: return false;
    case Kind::And: return tarski(s, a, f.left()) && tarski(s, a, f.right());
    case Kind::Or: return tarski(s, a, f.left()) || tarski(s, a, f.right());
    case Kind::Exists:
    case Kind::Forall: {
      for (ElemId m = 0; m < s.size(); ++m) {
        Assignment b = a;
        b[f.symbol()] = m;
        const bool r = tarski(s, b, f.body());
        if (f.kind() == Kind::Exists && r) return true;
        if (f.kind() == Kind::Forall && !r) return false;
      }
      return f.kind() == Kind::Forall;
    }
    default: throw std::runtime_error("oracle: not first-order");
  }
}

bool sat(const Structure& s, const Rows& x, const Formula& f) {
  auto all = [&](auto pred) { return std::all_of(x.begin(), x.end(), pred); };
  switch (f.kind()) {
    case Kind::RelAtom:
    case Kind::NegRelAtom:
    case Kind::Equal:
    case Kind::NotEqual:
    case Kind::Top:
      return all([&](const Assignment& a) { return tarski(s, a, f); });
    case Kind::Bot: return x.empty();
    case Kind::NE: return !x.empty();
    case Kind::Dep:
      return all([&](const Assignment& a) {
        return std::all_of(x.begin(), x.end(), [&](const Assignment& b) {
          return values(s, a, f.tuple(0)) != values(s, b, f.tuple(0)) ||
                 values(s, a, f.tuple(1)) == values(s, b, f.tuple(1));
        });
      });
    case Kind::Anon:
      return all([&](const Assignment& a) {
        return std::any_of(x.begin(), x.end(), [&](const Assignment& b) {
          return values(s, a, f.tuple(0)) == values(s, b, f.tuple(0)) &&
                 values(s, a, f.tuple(1)) != values(s, b, f.tuple(1));
        });
      });
    case Kind::Incl:
      return all([&](const Assignment& a) {
        return std::any_of(x.begin(), x.end(), [&](const Assignment& b) {
          return values(s, a, f.tuple(0)) == values(s, b, f.tuple(1));
        });
      });
    case Kind::Excl:
      return all([&](const Assignment& a) {
        return std::all_of(x.begin(), x.end(), [&](const Assignment& b) {
          return values(s, a, f.tuple(0)) != values(s, b, f.tuple(1));
        });
      });
    case Kind::Ind:
      return all([&](const Assignment& a) {
        return std::all_of(x.begin(), x.end(), [&](const Assignment& b) {
          if (values(s, a, f.tuple(0)) != values(s, b, f.tuple(0))) return true;
          return std::any_of(x.begin(), x.end(), [&](const Assignment& c) {
            return values(s, c, f.tuple(0)) == values(s, a, f.tuple(0)) &&
                   values(s, c, f.tuple(1)) == values(s, a, f.tuple(1)) &&
                   values(s, c, f.tuple(2)) == values(s, b, f.tuple(2));
          });
        });
      });
    case Kind::And: return sat(s, x, f.left()) && sat(s, x, f.right());
    case Kind::Or: {
      // Every pair Y, Z with Y ∪ Z = X, enumerated as a label per row:
      // left only, right only, or both.
      const std::vector<Assignment> rows(x.begin(), x.end());
      std::vector<int> label(rows.size(), 0);
      while (true) {
        Rows y, z;
        for (std::size_t i = 0; i < rows.size(); ++i) {
          if (label[i] != 1) y.insert(rows[i]);
          if (label[i] != 0) z.insert(rows[i]);
        }
        if (sat(s, y, f.left()) && sat(s, z, f.right())) return true;
        std::size_t i = 0;
        while (i < label.size() && label[i] == 2) label[i++] = 0;
        if (i == label.size()) return false;
        ++label[i];
      }
    }
    case Kind::Hook: return sat(s, x, desugar_hook(f));
    case Kind::BoolOr: return sat(s, x, f.left()) || sat(s, x, f.right());
    case Kind::BoolNeg: return !sat(s, x, f.body());
    case Kind::Exists: {
      bool found = false;
      each_supplement(s, x, f.symbol(), [&](const Rows& y) { return sat(s, y, f.body()); },
                      found);
      return found;
    }
    case Kind::Forall: {
      Rows y;
      for (const Assignment& a : x)
        for (ElemId m = 0; m < s.size(); ++m) {
          Assignment b = a;
          b[f.symbol()] = m;
          y.insert(b);
        }
      return sat(s, y, f.body());
    }
    case Kind::Flat:
      return all([&](const Assignment& a) { return sat(s, Rows{a}, f.body()); });
    case Kind::SomeRow:
      return std::any_of(x.begin(), x.end(),
                         [&](const Assignment& a) { return sat(s, Rows{a}, f.body()); });
  }
  throw std::runtime_error("oracle: unknown kind");
}

std::vector<Permutation> automorphisms(const Structure& s) {
  std::vector<ElemId> img(s.size());
  std::iota(img.begin(), img.end(), ElemId{0});
  std::vector<Permutation> out;
  do {
    bool ok = true;
    for (const auto& [name, rel] : s.relations()) {
      std::set<ElemTuple> mapped;
      for (const ElemTuple& t : rel.tuples()) {
        ElemTuple u;
        for (ElemId e : t) u.push_back(img[e]);
        mapped.insert(u);
      }
      ok = ok && mapped == std::set<ElemTuple>(rel.tuples().begin(), rel.tuples().end());
    }
    for (const auto& [name, c] : s.constants()) ok = ok && img[c] == c;
    if (ok) out.push_back(Permutation{img});
  } while (std::next_permutation(img.begin(), img.end()));
  return out;
}

}  // namespace oracle
