#include "flatteam/structure.hpp"

#include <algorithm>
#include <fstream>
#include <queue>
#include <regex>
#include <sstream>

#include "flatteam/report.hpp"

namespace flatteam {

namespace {

constexpr std::size_t kMaxDenseTable = std::size_t{1} << 26;

std::string trim(const std::string& s) {
  const auto b = s.find_first_not_of(" \t\r");
  if (b == std::string::npos) return {};
  const auto e = s.find_last_not_of(" \t\r");
  return s.substr(b, e - b + 1);
}

bool valid_element_name(const std::string& n) {
  static const std::regex re("[A-Za-z0-9_]+");
  return std::regex_match(n, re);
}

}  // namespace

// ---------------------------------------------------------------- Relation

Relation::Relation(std::size_t arity, std::size_t domain_size)
    : arity_(arity), domain_size_(domain_size) {
  std::size_t cells = 1;
  for (std::size_t i = 0; i < arity; ++i) {
    cells *= domain_size;
    if (cells > kMaxDenseTable) throw StructureError("relation table too large");
  }
  table_.assign(cells, false);
}

std::size_t Relation::index(std::span<const ElemId> t) const {
  std::size_t idx = 0;
  for (ElemId e : t) idx = idx * domain_size_ + e;
  return idx;
}

bool Relation::contains(std::span<const ElemId> t) const {
  return t.size() == arity_ && table_[index(t)];
}

void Relation::insert(const ElemTuple& t) {
  if (t.size() != arity_)
    throw StructureError("tuple length " + std::to_string(t.size()) +
                         " does not match arity " + std::to_string(arity_));
  for (ElemId e : t)
    if (e >= domain_size_) throw StructureError("tuple entry outside the domain");
  const std::size_t idx = index(t);
  if (table_[idx]) return;
  table_[idx] = true;
  tuples_.insert(std::lower_bound(tuples_.begin(), tuples_.end(), t), t);
}

// ---------------------------------------------------------------- Structure

Structure::Structure(std::vector<std::string> domain) : domain_(std::move(domain)) {
  if (domain_.empty()) throw StructureError("domain must be non-empty");
  if (domain_.size() > 255) throw StructureError("domain larger than 255 elements");
  for (std::size_t i = 0; i < domain_.size(); ++i) {
    if (!valid_element_name(domain_[i]))
      throw StructureError("invalid element name '" + domain_[i] + "'");
    if (!index_.emplace(domain_[i], static_cast<ElemId>(i)).second)
      throw StructureError("duplicate element '" + domain_[i] + "'");
  }
}

std::optional<ElemId> Structure::element(const std::string& name) const {
  auto it = index_.find(name);
  if (it == index_.end()) return std::nullopt;
  return it->second;
}

void Structure::add_relation(const std::string& name, std::size_t arity,
                             const std::vector<ElemTuple>& tuples) {
  auto [it, fresh] = relations_.try_emplace(name, arity, domain_.size());
  if (!fresh) throw StructureError("relation " + name + " declared twice");
  for (const ElemTuple& t : tuples) it->second.insert(t);
}

void Structure::add_tuple(const std::string& name, const ElemTuple& t) {
  auto it = relations_.find(name);
  if (it == relations_.end()) throw StructureError("unknown relation " + name);
  it->second.insert(t);
}

void Structure::set_constant(const std::string& name, ElemId e) {
  if (e >= domain_.size()) throw StructureError("constant outside the domain");
  constants_[name] = e;
}

const Relation* Structure::relation(const std::string& name) const {
  auto it = relations_.find(name);
  return it == relations_.end() ? nullptr : &it->second;
}

std::optional<ElemId> Structure::constant(const std::string& name) const {
  auto it = constants_.find(name);
  if (it == constants_.end()) return std::nullopt;
  return it->second;
}

// ---------------------------------------------------------------- model files

Structure parse_model(std::istream& in) {
  std::optional<Structure> s;
  std::string line;
  std::size_t lineno = 0;
  auto fail = [&](const std::string& msg) -> StructureError {
    return StructureError("model line " + std::to_string(lineno) + ": " + msg);
  };
  auto elem = [&](const std::string& name) {
    auto e = s->element(trim(name));
    if (!e) throw fail("unknown element '" + trim(name) + "'");
    return *e;
  };
  static const std::regex rel_re(R"(rel\s+([A-Za-z_][A-Za-z0-9_]*)\s*/\s*(\d+)\s*:(.*))");
  static const std::regex const_re(
      R"(const\s+([A-Za-z0-9_]+)\s*=\s*([A-Za-z0-9_]+))");
  static const std::regex tuple_re(R"(\(([^()]*)\))");
  while (std::getline(in, line)) {
    ++lineno;
    if (auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
    line = trim(line);
    if (line.empty()) continue;
    std::smatch m;
    if (line.rfind("domain:", 0) == 0) {
      if (s) throw fail("domain declared twice");
      std::istringstream names(line.substr(7));
      std::vector<std::string> dom;
      for (std::string n; names >> n;) dom.push_back(n);
      try {
        s.emplace(std::move(dom));
      } catch (const StructureError& e) {
        throw fail(e.what());
      }
    } else if (std::regex_match(line, m, rel_re)) {
      if (!s) throw fail("relation before domain");
      const std::string name = m[1];
      const std::size_t arity = std::stoul(m[2]);
      s->add_relation(name, arity);
      const std::string rest = m[3];
      auto begin = std::sregex_iterator(rest.begin(), rest.end(), tuple_re);
      std::string leftover = std::regex_replace(rest, tuple_re, "");
      if (!trim(leftover).empty()) throw fail("malformed tuple list");
      for (auto it = begin; it != std::sregex_iterator(); ++it) {
        ElemTuple t;
        std::string inner = (*it)[1];
        if (!trim(inner).empty()) {
          std::istringstream parts(inner);
          for (std::string p; std::getline(parts, p, ',');) t.push_back(elem(p));
        }
        try {
          s->add_tuple(name, t);
        } catch (const StructureError& e) {
          throw fail(e.what());
        }
      }
    } else if (std::regex_match(line, m, const_re)) {
      if (!s) throw fail("constant before domain");
      s->set_constant(m[1], elem(m[2]));
    } else {
      throw fail("cannot parse '" + line + "'");
    }
  }
  if (!s) throw StructureError("model has no domain line");
  return std::move(*s);
}

Structure parse_model_text(const std::string& text) {
  std::istringstream in(text);
  return parse_model(in);
}

Structure load_model(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw StructureError("cannot open model file " + path);
  return parse_model(in);
}

std::string write_model(const Structure& s) {
  std::ostringstream out;
  out << "domain:";
  for (const auto& n : s.domain()) out << ' ' << n;
  out << '\n';
  for (const auto& [name, r] : s.relations()) {
    out << "rel " << name << '/' << r.arity() << ':';
    for (const ElemTuple& t : r.tuples()) {
      out << " (";
      for (std::size_t i = 0; i < t.size(); ++i)
        out << (i ? "," : "") << s.element_name(t[i]);
      out << ')';
    }
    out << '\n';
  }
  for (const auto& [name, e] : s.constants())
    out << "const " << name << " = " << s.element_name(e) << '\n';
  return out.str();
}

// ---------------------------------------------------------------- generators

namespace {

void add_cycle(Structure& s, std::size_t offset, std::size_t length, bool symmetric) {
  for (std::size_t i = 0; i < length; ++i) {
    const auto a = static_cast<ElemId>(offset + i);
    const auto b = static_cast<ElemId>(offset + (i + 1) % length);
    s.add_tuple("E", {a, b});
    if (symmetric) s.add_tuple("E", {b, a});
  }
}

std::vector<std::string> vertex_names(std::size_t n) {
  std::vector<std::string> names;
  for (std::size_t i = 0; i < n; ++i) names.push_back("v" + std::to_string(i));
  return names;
}

}  // namespace

Structure gen_cycle(std::size_t length, bool symmetric) {
  if (length < 2) throw StructureError("cycle length must be at least 2");
  Structure s(vertex_names(length));
  s.add_relation("E", 2);
  add_cycle(s, 0, length, symmetric);
  return s;
}

Structure gen_A(unsigned n) {
  if (n > 5) throw StructureError("gen_A: n too large");
  const std::size_t len = std::size_t{1} << (n + 1);
  Structure s(vertex_names(2 * len));
  s.add_relation("E", 2);
  add_cycle(s, 0, len, true);
  add_cycle(s, len, len, true);
  return s;
}

Structure gen_B(unsigned n) {
  if (n > 5) throw StructureError("gen_B: n too large");
  return gen_cycle(std::size_t{1} << (n + 2), true);
}

bool is_connected(const Structure& s, const std::string& rel) {
  const Relation* r = s.relation(rel);
  if (!r) throw StructureError("unknown relation " + rel);
  if (r->arity() != 2) throw StructureError("relation " + rel + " is not binary");
  std::vector<std::vector<ElemId>> adj(s.size());
  for (const ElemTuple& t : r->tuples()) {
    adj[t[0]].push_back(t[1]);
    adj[t[1]].push_back(t[0]);
  }
  std::vector<bool> seen(s.size(), false);
  std::queue<ElemId> todo;
  todo.push(0);
  seen[0] = true;
  std::size_t reached = 1;
  while (!todo.empty()) {
    const ElemId v = todo.front();
    todo.pop();
    for (ElemId w : adj[v])
      if (!seen[w]) {
        seen[w] = true;
        ++reached;
        todo.push(w);
      }
  }
  return reached == s.size();
}

// ---------------------------------------------------------------- permutations

Permutation Permutation::identity(std::size_t n) {
  Permutation p;
  p.image.resize(n);
  for (std::size_t i = 0; i < n; ++i) p.image[i] = static_cast<ElemId>(i);
  return p;
}

bool Permutation::is_identity() const {
  for (std::size_t i = 0; i < image.size(); ++i)
    if (image[i] != i) return false;
  return true;
}

Permutation Permutation::then(const Permutation& next) const {
  Permutation out;
  out.image.resize(image.size());
  for (std::size_t i = 0; i < image.size(); ++i) out.image[i] = next.image[image[i]];
  return out;
}

Permutation Permutation::inverse() const {
  Permutation out;
  out.image.resize(image.size());
  for (std::size_t i = 0; i < image.size(); ++i) out.image[image[i]] = static_cast<ElemId>(i);
  return out;
}

bool is_automorphism(const Structure& s, const Permutation& p) {
  if (p.size() != s.size()) return false;
  std::vector<bool> hit(s.size(), false);
  for (ElemId e : p.image) {
    if (e >= s.size() || hit[e]) return false;
    hit[e] = true;
  }
  for (const auto& [name, e] : s.constants())
    if (p(e) != e) return false;
  ElemTuple mapped;
  for (const auto& [name, r] : s.relations()) {
    // A bijection mapping R into R maps it onto R, since R is finite.
    for (const ElemTuple& t : r.tuples()) {
      mapped.resize(t.size());
      for (std::size_t i = 0; i < t.size(); ++i) mapped[i] = p(t[i]);
      if (!r.contains(mapped)) return false;
    }
  }
  return true;
}

std::vector<Permutation> automorphisms(const Structure& s, std::size_t max_domain) {
  if (s.size() > max_domain)
    throw StructureError("automorphism search limited to domains of size " +
                         std::to_string(max_domain));
  std::vector<Permutation> out;
  Permutation p = Permutation::identity(s.size());
  do {
    if (is_automorphism(s, p)) out.push_back(p);
  } while (std::next_permutation(p.image.begin(), p.image.end()));
  return out;
}

PropertyReport check_magma_hypothesis(const Structure& s,
                                      const std::vector<Permutation>& maps) {
  PropertyReport r;
  r.universe = "structure of size " + std::to_string(s.size()) + ", " +
               std::to_string(maps.size()) + " maps";
  for (const Permutation& f : maps)
    if (!is_automorphism(s, f)) throw StructureError("map is not an automorphism");

  std::vector<Permutation> sorted = maps;
  std::sort(sorted.begin(), sorted.end());
  auto member = [&](const Permutation& p) {
    return std::binary_search(sorted.begin(), sorted.end(), p);
  };
  for (const Permutation& f : maps)
    for (const Permutation& g : maps)
      if (!member(f.then(g))) {
        r.verdict = PropertyReport::Verdict::Counterexample;
        r.detail = "not closed under composition";
        return r;
      }
  if (!member(Permutation::identity(s.size()))) {
    r.verdict = PropertyReport::Verdict::Counterexample;
    r.detail = "no neutral element";
    return r;
  }
  for (ElemId m1 = 0; m1 < s.size(); ++m1)
    for (ElemId m2 = 0; m2 < s.size(); ++m2) {
      if (m1 == m2) continue;
      const bool ok = std::any_of(maps.begin(), maps.end(), [&](const Permutation& f) {
        return f(m1) == m1 && f(m2) != m2;
      });
      if (!ok) {
        r.verdict = PropertyReport::Verdict::Counterexample;
        r.detail = "no map fixes " + s.element_name(m1) + " while moving " +
                   s.element_name(m2);
        return r;
      }
    }
  return r;
}

const char* verdict_name(PropertyReport::Verdict v) {
  switch (v) {
    case PropertyReport::Verdict::Holds: return "holds";
    case PropertyReport::Verdict::Counterexample: return "counterexample";
    case PropertyReport::Verdict::Inapplicable: return "inapplicable";
  }
  return "?";
}

}  // namespace flatteam
