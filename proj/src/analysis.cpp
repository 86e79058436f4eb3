#include "flatteam/analysis.hpp"

#include <algorithm>
#include <bit>
#include <sstream>

#include "flatteam/flattening.hpp"
#include "flatteam/parser.hpp"

namespace flatteam {

namespace {

std::string element_label(std::size_t i) {
  if (i < 26) return std::string(1, static_cast<char>('a' + i));
  return "e" + std::to_string(i);
}

std::vector<ElemTuple> tuples_of(std::size_t n, std::size_t arity) {
  std::vector<ElemTuple> out;
  ElemTuple t(arity, 0);
  while (true) {
    out.push_back(t);
    std::size_t k = arity;
    while (k > 0) {
      --k;
      if (++t[k] < n) break;
      t[k] = 0;
      if (k == 0) return out;
    }
    if (arity == 0) return out;
  }
}

std::uint64_t permuted_code(std::uint64_t code, const std::vector<std::vector<ElemTuple>>& rel_tuples,
                            const std::vector<std::size_t>& perm, std::size_t n) {
  std::uint64_t out = 0;
  std::size_t base = 0;
  for (const auto& tuples : rel_tuples) {
    for (std::size_t i = 0; i < tuples.size(); ++i) {
      if (!(code >> (base + i) & 1)) continue;
      std::size_t idx = 0;
      for (ElemId e : tuples[i]) idx = idx * n + perm[e];
      out |= std::uint64_t{1} << (base + idx);
    }
    base += tuples.size();
  }
  return out;
}

Team team_of(const SatTable& t, std::size_t k, const std::vector<std::string>& vars,
             std::uint64_t mask) {
  std::vector<Row> rows;
  for (std::size_t i = 0; i < t.rows[k].size(); ++i)
    if (mask >> i & 1) rows.push_back(t.rows[k][i]);
  return Team(vars, std::move(rows));
}

struct Finder {
  const SatTable& table;
  const Universe& u;
  PropertyReport report;

  Finder(const SatTable& t, const Universe& univ) : table(t), u(univ) {
    report.universe = u.describe();
  }

  PropertyReport fail(std::size_t k, std::vector<std::uint64_t> masks, std::string detail) {
    report.verdict = PropertyReport::Verdict::Counterexample;
    report.structure_index = k;
    report.structure_name = u.names[k];
    for (auto m : masks) report.teams.push_back(team_of(table, k, u.vars, m));
    std::ostringstream out;
    out << detail << " on " << u.names[k];
    for (const Team& t : report.teams) out << ' ' << describe_team(t, u.structures[k]);
    report.detail = out.str();
    return report;
  }
};

bool all_singletons(const std::vector<char>& sat, std::uint64_t mask) {
  for (std::uint64_t m = mask; m; m &= m - 1)
    if (!sat[m & (~m + 1)]) return false;
  return true;
}

}  // namespace

void Universe::add(Structure s, std::string name) {
  structures.push_back(std::move(s));
  names.push_back(std::move(name));
}

std::string Universe::describe() const {
  std::ostringstream out;
  std::map<std::size_t, std::size_t> by_size;
  for (const auto& s : structures) ++by_size[s.size()];
  out << structures.size() << " structures (";
  bool first = true;
  for (auto [n, c] : by_size) {
    out << (first ? "" : ", ") << c << " of size " << n;
    first = false;
  }
  out << "), teams over {";
  for (std::size_t i = 0; i < vars.size(); ++i) out << (i ? "," : "") << vars[i];
  out << "}";
  return out.str();
}

Universe default_universe(const UniverseOptions& opts) {
  Universe u;
  u.vars = opts.vars;
  for (std::size_t n = 1; n <= opts.max_domain; ++n) {
    std::vector<std::vector<ElemTuple>> rel_tuples;
    std::size_t bits = 0;
    for (const auto& [name, arity] : opts.signature) {
      rel_tuples.push_back(tuples_of(n, arity));
      bits += rel_tuples.back().size();
    }
    if (bits > 20) throw StructureError("universe enumeration over more than 2^20 structures");
    std::vector<std::vector<std::size_t>> perms;
    std::vector<std::size_t> p(n);
    for (std::size_t i = 0; i < n; ++i) p[i] = i;
    do perms.push_back(p);
    while (std::next_permutation(p.begin(), p.end()));

    std::vector<std::uint64_t> classes;
    for (std::uint64_t code = 0; code < (std::uint64_t{1} << bits); ++code) {
      std::uint64_t canon = code;
      for (const auto& perm : perms) canon = std::min(canon, permuted_code(code, rel_tuples, perm, n));
      if (canon == code) classes.push_back(code);
    }
    std::vector<std::uint64_t> picked;
    if (classes.size() <= opts.per_size_cap || opts.per_size_cap < 2) {
      picked = opts.per_size_cap == 1 ? std::vector<std::uint64_t>{classes.front()} : classes;
    } else {
      for (std::size_t i = 0; i < opts.per_size_cap; ++i)
        picked.push_back(classes[i * (classes.size() - 1) / (opts.per_size_cap - 1)]);
      picked.erase(std::unique(picked.begin(), picked.end()), picked.end());
    }
    std::vector<std::string> dom;
    for (std::size_t i = 0; i < n; ++i) dom.push_back(element_label(i));
    for (std::uint64_t code : picked) {
      Structure s(dom);
      std::size_t base = 0;
      for (std::size_t r = 0; r < opts.signature.size(); ++r) {
        std::vector<ElemTuple> members;
        for (std::size_t i = 0; i < rel_tuples[r].size(); ++i)
          if (code >> (base + i) & 1) members.push_back(rel_tuples[r][i]);
        s.add_relation(opts.signature[r].first, opts.signature[r].second, members);
        base += rel_tuples[r].size();
      }
      u.add(std::move(s), "M" + std::to_string(n) + "#" + std::to_string(code));
    }
  }
  return u;
}

SatTable tabulate(const Formula& f, const Universe& u, const CheckOptions& opts) {
  SatTable t;
  for (const Structure& s : u.structures) {
    std::vector<Row> rows = all_rows(s, u.vars.size());
    if (rows.size() > TeamEnumerator::kDefaultMaxRows)
      throw TeamError("universe structure has more than " +
                      std::to_string(TeamEnumerator::kDefaultMaxRows) + " possible rows");
    Evaluator ev(s, opts.strategy, opts.budget);
    std::vector<char> sat(std::size_t{1} << rows.size());
    for (std::uint64_t mask = 0; mask < sat.size(); ++mask) {
      std::vector<Row> sub;
      for (std::size_t i = 0; i < rows.size(); ++i)
        if (mask >> i & 1) sub.push_back(rows[i]);
      sat[mask] = ev.eval(f, Team(u.vars, std::move(sub)));
    }
    t.sat.push_back(std::move(sat));
    t.rows.push_back(std::move(rows));
  }
  return t;
}

PropertyReport is_flat(const Formula& f, const Universe& u, const CheckOptions& opts) {
  const SatTable t = tabulate(f, u, opts);
  Finder find(t, u);
  for (std::size_t k = 0; k < t.sat.size(); ++k)
    for (std::uint64_t m = 0; m < t.sat[k].size(); ++m) {
      const bool rows_ok = all_singletons(t.sat[k], m);
      if (t.sat[k][m] && !rows_ok) return find.fail(k, {m}, "team satisfies but some row does not");
      if (!t.sat[k][m] && rows_ok) return find.fail(k, {m}, "every row satisfies but the team does not");
    }
  return find.report;
}

PropertyReport is_downwards_closed(const Formula& f, const Universe& u, const CheckOptions& opts) {
  const SatTable t = tabulate(f, u, opts);
  Finder find(t, u);
  for (std::size_t k = 0; k < t.sat.size(); ++k)
    for (std::uint64_t m = 0; m < t.sat[k].size(); ++m) {
      if (!t.sat[k][m]) continue;
      // Removing one row at a time reaches every subteam by induction.
      for (std::uint64_t b = m; b; b &= b - 1) {
        const std::uint64_t sub = m & ~(b & (~b + 1));
        if (!t.sat[k][sub]) return find.fail(k, {m, sub}, "subteam of a satisfying team fails");
      }
    }
  return find.report;
}

PropertyReport is_union_closed(const Formula& f, const Universe& u, const CheckOptions& opts) {
  const SatTable t = tabulate(f, u, opts);
  Finder find(t, u);
  for (std::size_t k = 0; k < t.sat.size(); ++k) {
    if (!t.sat[k][0]) return find.fail(k, {0}, "empty union (the empty team) fails");
    std::vector<std::uint64_t> good;
    for (std::uint64_t m = 0; m < t.sat[k].size(); ++m)
      if (t.sat[k][m]) good.push_back(m);
    for (std::size_t i = 0; i < good.size(); ++i)
      for (std::size_t j = i + 1; j < good.size(); ++j)
        if (!t.sat[k][good[i] | good[j]])
          return find.fail(k, {good[i], good[j], good[i] | good[j]},
                          "union of two satisfying teams fails");
  }
  return find.report;
}

PropertyReport is_downwards_flat(const Formula& f, const Universe& u, const CheckOptions& opts) {
  const SatTable t = tabulate(f, u, opts);
  Finder find(t, u);
  for (std::size_t k = 0; k < t.sat.size(); ++k)
    for (std::uint64_t m = 0; m < t.sat[k].size(); ++m)
      if (t.sat[k][m] && !all_singletons(t.sat[k], m))
        return find.fail(k, {m}, "team satisfies but some row does not");
  return find.report;
}

PropertyReport is_upwards_flat(const Formula& f, const Universe& u, const CheckOptions& opts) {
  const SatTable t = tabulate(f, u, opts);
  Finder find(t, u);
  for (std::size_t k = 0; k < t.sat.size(); ++k)
    for (std::uint64_t m = 0; m < t.sat[k].size(); ++m)
      if (!t.sat[k][m] && all_singletons(t.sat[k], m))
        return find.fail(k, {m}, "every row satisfies but the team does not");
  return find.report;
}

PropertyReport is_n_coherent(const Formula& f, std::size_t n, const Universe& u,
                             const CheckOptions& opts) {
  const SatTable t = tabulate(f, u, opts);
  Finder find(t, u);
  for (std::size_t k = 0; k < t.sat.size(); ++k)
    for (std::uint64_t m = 0; m < t.sat[k].size(); ++m) {
      std::optional<std::uint64_t> bad;
      for (std::uint64_t sub = m;; sub = (sub - 1) & m) {
        if (static_cast<std::size_t>(std::popcount(sub)) == n && !t.sat[k][sub]) {
          bad = sub;
          break;
        }
        if (sub == 0) break;
      }
      if (t.sat[k][m] && bad)
        return find.fail(k, {m, *bad}, "team satisfies but a subteam of size " +
                                           std::to_string(n) + " does not");
      if (!t.sat[k][m] && !bad)
        return find.fail(k, {m}, "every subteam of size " + std::to_string(n) +
                                     " satisfies but the team does not");
    }
  return find.report;
}

PropertyReport equivalent(const Formula& a, const Formula& b, const Universe& u,
                          const CheckOptions& opts) {
  const SatTable ta = tabulate(a, u, opts);
  const SatTable tb = tabulate(b, u, opts);
  Finder find(ta, u);
  for (std::size_t k = 0; k < ta.sat.size(); ++k)
    for (std::uint64_t m = 0; m < ta.sat[k].size(); ++m)
      if (ta.sat[k][m] != tb.sat[k][m])
        return find.fail(k, {m}, ta.sat[k][m] ? "left holds, right fails" : "right holds, left fails");
  return find.report;
}

PropertyReport entails(const Formula& a, const Formula& b, const Universe& u,
                       const CheckOptions& opts) {
  const SatTable ta = tabulate(a, u, opts);
  const SatTable tb = tabulate(b, u, opts);
  Finder find(ta, u);
  for (std::size_t k = 0; k < ta.sat.size(); ++k)
    for (std::uint64_t m = 0; m < ta.sat[k].size(); ++m)
      if (ta.sat[k][m] && !tb.sat[k][m]) return find.fail(k, {m}, "left holds, right fails");
  return find.report;
}

ClosureProfile closure_profile(const SatTable& t) {
  ClosureProfile p{true, true, true, true, true};
  for (const auto& sat : t.sat) {
    if (!sat[0]) p.uc = false;
    std::vector<std::uint64_t> good;
    for (std::uint64_t m = 0; m < sat.size(); ++m) {
      const bool rows_ok = all_singletons(sat, m);
      if (static_cast<bool>(sat[m]) != rows_ok) p.flat = false;
      if (sat[m]) {
        good.push_back(m);
        if (!rows_ok) p.df = false;
        for (std::uint64_t b = m; b; b &= b - 1)
          if (!sat[m & ~(b & (~b + 1))]) p.dc = false;
      } else if (rows_ok) {
        p.uf = false;
      }
    }
    if (p.uc)
      for (std::size_t i = 0; i < good.size() && p.uc; ++i)
        for (std::size_t j = i + 1; j < good.size(); ++j)
          if (!sat[good[i] | good[j]]) {
            p.uc = false;
            break;
          }
  }
  return p;
}

ClosureProfile closure_profile(const Formula& f, const Universe& u, const CheckOptions& opts) {
  return closure_profile(tabulate(f, u, opts));
}

PropertyReport magma_lemma_check(const Structure& s, const std::vector<Permutation>& maps,
                                 const std::vector<Formula>& pool,
                                 const std::vector<std::string>& vars,
                                 const CheckOptions& opts) {
  PropertyReport r = check_magma_hypothesis(s, maps);
  r.universe = "structure of size " + std::to_string(s.size()) + ", " +
               std::to_string(maps.size()) + " maps, " + std::to_string(pool.size()) +
               " formulas, closed teams over " + std::to_string(vars.size()) + " variables";
  if (!r.holds()) {
    r.verdict = PropertyReport::Verdict::Inapplicable;
    r.detail = "magma hypothesis fails: " + r.detail;
    return r;
  }
  std::vector<Team> closed;
  for (const Team& x : enumerate_teams(s, vars))
    if (team_closure(x, maps) == x) closed.push_back(x);

  Evaluator ev(s, opts.strategy, opts.budget);
  for (const Formula& f : pool) {
    const Formula ff = flatten(f);
    for (const Team& x : closed) {
      const bool a = ev.eval(f, x);
      const bool b = ev.eval(ff, x);
      if (a != b) {
        r.verdict = PropertyReport::Verdict::Counterexample;
        r.structure_name = "magma structure";
        r.teams = {x};
        r.detail = render(f) + (a ? " holds" : " fails") + " but its flattening " + render(ff) +
                   (b ? " holds" : " fails") + " on closed team " + describe_team(x, s);
        return r;
      }
    }
  }
  r.detail = std::to_string(closed.size()) + " closed teams";
  return r;
}

}  // namespace flatteam
