#include "flatteam/team.hpp"

#include <algorithm>
#include <fstream>
#include <sstream>

namespace flatteam {

namespace {

void canonicalize(std::vector<Row>& rows) {
  std::sort(rows.begin(), rows.end());
  rows.erase(std::unique(rows.begin(), rows.end()), rows.end());
}

std::string trim(const std::string& s) {
  const auto b = s.find_first_not_of(" \t\r");
  if (b == std::string::npos) return {};
  const auto e = s.find_last_not_of(" \t\r");
  return s.substr(b, e - b + 1);
}

}  // namespace

Team::Team(std::vector<std::string> vars, std::vector<Row> rows)
    : vars_(std::move(vars)), rows_(std::move(rows)) {
  std::set<std::string> seen;
  for (const auto& v : vars_)
    if (!seen.insert(v).second) throw TeamError("variable " + v + " listed twice");
  for (const Row& r : rows_)
    if (r.size() != vars_.size()) throw TeamError("row length does not match the variables");
  canonicalize(rows_);
}

Team Team::unit() { return Team({}, {Row{}}); }

std::optional<std::size_t> Team::var_index(const std::string& v) const {
  auto it = std::find(vars_.begin(), vars_.end(), v);
  if (it == vars_.end()) return std::nullopt;
  return static_cast<std::size_t>(it - vars_.begin());
}

bool Team::contains(const Row& r) const {
  return std::binary_search(rows_.begin(), rows_.end(), r);
}

Assignment Team::assignment(std::size_t i) const {
  Assignment a;
  for (std::size_t k = 0; k < vars_.size(); ++k) a[vars_[k]] = rows_.at(i)[k];
  return a;
}

Team Team::subteam(std::uint64_t mask) const {
  Team t;
  t.vars_ = vars_;
  for (std::size_t i = 0; i < rows_.size() && i < 64; ++i)
    if (mask >> i & 1) t.rows_.push_back(rows_[i]);
  return t;
}

Team duplicate(const Team& x, const std::string& v, const Structure& s) {
  std::map<Assignment, std::set<ElemId>> h;
  std::set<ElemId> all;
  for (std::size_t m = 0; m < s.size(); ++m) all.insert(static_cast<ElemId>(m));
  for (std::size_t i = 0; i < x.size(); ++i) h[x.assignment(i)] = all;
  return supplement(x, v, h);
}

Team supplement(const Team& x, const std::string& v,
                const std::map<Assignment, std::set<ElemId>>& h) {
  std::vector<std::string> vars = x.vars();
  const auto existing = x.var_index(v);
  const std::size_t col = existing ? *existing : vars.size();
  if (!existing) vars.push_back(v);
  std::vector<Row> rows;
  for (std::size_t i = 0; i < x.size(); ++i) {
    auto it = h.find(x.assignment(i));
    if (it == h.end()) throw TeamError("supplement undefined on a row");
    if (it->second.empty()) throw TeamError("supplement maps a row to the empty set");
    for (ElemId m : it->second) {
      Row r = x.rows()[i];
      if (existing)
        r[col] = m;
      else
        r.push_back(m);
      rows.push_back(std::move(r));
    }
  }
  return Team(std::move(vars), std::move(rows));
}

std::set<ElemTuple> project_relation(const Team& x, const std::vector<std::string>& vars) {
  std::vector<std::size_t> cols;
  for (const auto& v : vars) {
    auto i = x.var_index(v);
    if (!i) throw TeamError("variable " + v + " not in the team");
    cols.push_back(*i);
  }
  std::set<ElemTuple> out;
  for (const Row& r : x.rows()) {
    ElemTuple t;
    for (std::size_t c : cols) t.push_back(r[c]);
    out.insert(std::move(t));
  }
  return out;
}

Team team_closure(const Team& x, const std::vector<Permutation>& maps) {
  std::vector<Row> rows;
  for (const Row& r : x.rows())
    for (const Permutation& f : maps) {
      Row img(r.size());
      for (std::size_t k = 0; k < r.size(); ++k) img[k] = f(r[k]);
      rows.push_back(std::move(img));
    }
  return Team(x.vars(), std::move(rows));
}

std::vector<Row> all_rows(const Structure& s, std::size_t nvars) {
  std::vector<Row> out;
  Row r(nvars, 0);
  while (true) {
    out.push_back(r);
    std::size_t k = nvars;
    while (k > 0) {
      --k;
      if (++r[k] < s.size()) break;
      r[k] = 0;
      if (k == 0) return out;
    }
    if (nvars == 0) return out;
  }
}

TeamEnumerator::TeamEnumerator(const Structure& s, std::vector<std::string> vars,
                               std::optional<std::size_t> size_cap, std::size_t max_rows)
    : vars_(std::move(vars)), size_cap_(size_cap) {
  std::size_t n = 1;
  for (std::size_t i = 0; i < vars_.size(); ++i) {
    n *= s.size();
    if (n > max_rows || n > 62)
      throw TeamError("team enumeration over more than " + std::to_string(max_rows) +
                      " possible rows");
  }
  rows_ = all_rows(s, vars_.size());
}

bool TeamEnumerator::next(Team& out) {
  const std::uint64_t limit = std::uint64_t{1} << rows_.size();
  while (!done_) {
    const std::uint64_t m = mask_;
    if (++mask_ == limit) done_ = true;
    if (size_cap_ && static_cast<std::size_t>(__builtin_popcountll(m)) > *size_cap_) continue;
    std::vector<Row> rows;
    for (std::size_t i = 0; i < rows_.size(); ++i)
      if (m >> i & 1) rows.push_back(rows_[i]);
    out = Team(vars_, std::move(rows));
    return true;
  }
  return false;
}

std::vector<Team> enumerate_teams(const Structure& s, const std::vector<std::string>& vars,
                                  std::optional<std::size_t> size_cap, std::size_t max_rows) {
  TeamEnumerator en(s, vars, size_cap, max_rows);
  std::vector<Team> out;
  for (Team t; en.next(t);) out.push_back(t);
  return out;
}

Team parse_team(std::istream& in, const Structure& s) {
  std::optional<std::vector<std::string>> vars;
  std::vector<Row> rows;
  std::string line;
  std::size_t lineno = 0;
  auto fail = [&](const std::string& msg) {
    return TeamError("team line " + std::to_string(lineno) + ": " + msg);
  };
  while (std::getline(in, line)) {
    ++lineno;
    if (auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
    line = trim(line);
    if (line.empty()) continue;
    if (line.rfind("vars:", 0) == 0) {
      if (vars) throw fail("vars declared twice");
      std::istringstream names(line.substr(5));
      vars.emplace();
      for (std::string n; names >> n;) vars->push_back(n);
    } else if (line.rfind("row:", 0) == 0) {
      if (!vars) throw fail("row before vars");
      std::istringstream vals(line.substr(4));
      Row r;
      for (std::string n; vals >> n;) {
        auto e = s.element(n);
        if (!e) throw fail("unknown element '" + n + "'");
        r.push_back(*e);
      }
      if (r.size() != vars->size()) throw fail("row length does not match vars");
      if (std::find(rows.begin(), rows.end(), r) != rows.end()) throw fail("duplicate row");
      rows.push_back(std::move(r));
    } else {
      throw fail("cannot parse '" + line + "'");
    }
  }
  if (!vars) throw TeamError("team has no vars line");
  return Team(std::move(*vars), std::move(rows));
}

Team parse_team_text(const std::string& text, const Structure& s) {
  std::istringstream in(text);
  return parse_team(in, s);
}

Team load_team(const std::string& path, const Structure& s) {
  std::ifstream in(path);
  if (!in) throw TeamError("cannot open team file " + path);
  return parse_team(in, s);
}

std::string write_team(const Team& x, const Structure& s) {
  std::ostringstream out;
  out << "vars:";
  for (const auto& v : x.vars()) out << ' ' << v;
  out << '\n';
  for (const Row& r : x.rows()) {
    out << "row:";
    for (ElemId e : r) out << ' ' << s.element_name(e);
    out << '\n';
  }
  return out.str();
}

std::string describe_team(const Team& x, const Structure& s) {
  std::ostringstream out;
  out << '{';
  for (std::size_t i = 0; i < x.size(); ++i) {
    out << (i ? ", " : "") << '(';
    for (std::size_t k = 0; k < x.vars().size(); ++k)
      out << (k ? " " : "") << x.vars()[k] << '=' << s.element_name(x.rows()[i][k]);
    out << ')';
  }
  out << '}';
  return out.str();
}

}  // namespace flatteam
