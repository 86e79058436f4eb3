#include "flatteam/experiments.hpp"

#include <chrono>
#include <functional>
#include <random>
#include <sstream>
#include <stdexcept>

#include "flatteam/analysis.hpp"
#include "flatteam/parser.hpp"
#include "flatteam/pool.hpp"

namespace flatteam {

const char* const kDisconnectSentence =
    "E y. F (E x. (x != y & A z. (E(x,z) => inc(z; x))))";
const char* const kSeparatingSentence =
    "E x. F (E y. (y != x & A z. (E(y,z) => (z != x & anon(y; z) & anon(z; y)))))";

namespace {

using Verdict = ExperimentResult::Verdict;

struct Outcome {
  bool ok = true;
  std::ostringstream details;
  std::vector<std::string> failures;

  void require(bool cond, const std::string& what) {
    if (!cond) {
      ok = false;
      failures.push_back(what);
    }
  }
  ExperimentResult finish(const std::string& id) {
    ExperimentResult r;
    r.id = id;
    r.verdict = ok ? Verdict::Pass : Verdict::Fail;
    std::string d = details.str();
    for (std::size_t i = 0; i < failures.size() && i < 3; ++i) d += "; FAILED: " + failures[i];
    if (failures.size() > 3) d += "; and " + std::to_string(failures.size() - 3) + " more";
    r.details = d;
    return r;
  }
};

Universe universe(const ExperimentOptions& o, std::vector<std::string> vars = {"x", "y"}) {
  UniverseOptions u;
  u.max_domain = o.max_domain;
  u.per_size_cap = o.per_size_cap;
  u.vars = std::move(vars);
  return default_universe(u);
}

CheckOptions check_options(const ExperimentOptions& o) { return {o.strategy, o.budget}; }

const char* yes_no(bool b) { return b ? "true" : "false"; }

// ---------------------------------------------------------------- atoms

ExperimentResult atoms_flattening(const ExperimentOptions& o) {
  Outcome out;
  const Universe u = universe(o);
  const CheckOptions c = check_options(o);
  const char* atoms[] = {"dep(x; y)", "const(y)", "dep(x, y; y)", "anon(x; y)", "nonconst(y)",
                         "inc(x; y)", "inc(x, y; y, x)", "ind(; x; y)", "ind(x; y; x)"};
  std::size_t checked = 0;
  for (const char* text : atoms) {
    const Formula f = parse_formula(text);
    const Formula cand = flatten(f, o.exclusion);
    const PropertyReport r = verify_flattening_axioms(f, cand, u, c);
    out.require(r.holds(), std::string(text) + ": " + r.detail);
    ++checked;
  }
  // Both exclusion flattenings satisfy the axioms.
  for (const char* cand : {"TOP", "x != y"}) {
    const PropertyReport r = verify_flattening_axioms(parse_formula("exc(x; y)"),
                                                      parse_formula(cand), u, c);
    out.require(r.holds(), std::string("exc(x; y) -> ") + cand + ": " + r.detail);
    ++checked;
  }
  // BOT is not a flattening of anon: some team satisfies the atom.
  const PropertyReport bad =
      verify_flattening_axioms(parse_formula("anon(x; y)"), bot(), u, c);
  out.require(bad.refuted(), "anon(x; y) -> BOT was not refuted");
  out.details << checked << " atom flattenings satisfy axioms 1-3 over " << u.describe()
              << "; anon -> BOT refuted as expected";
  return out.finish("atoms-flattening");
}

ExperimentResult atoms_F(const ExperimentOptions& o) {
  Outcome out;
  const Universe u = universe(o);
  const CheckOptions c = check_options(o);
  const std::pair<const char*, const char*> cases[] = {
      {"F dep(x; y)", "TOP"},          {"F const(x)", "TOP"},
      {"F dep(x, y; x)", "TOP"},       {"F anon(x; y)", "BOT"},
      {"F nonconst(y)", "BOT"},        {"F inc(x; y)", "x = y"},
      {"F inc(x, y; y, x)", "x = y & y = x"},
      {"F exc(x; y)", "x != y"},       {"F exc(x, y; y, x)", "x != y | y != x"},
      {"F ind(; x; y)", "TOP"},        {"F ind(x; y; x)", "TOP"},
      {"F P(x)", "P(x)"},              {"F !E(x, y)", "!E(x, y)"},
      {"F x = y", "x = y"},            {"F x != y", "x != y"},
  };
  for (const auto& [lhs, rhs] : cases) {
    const Formula l = parse_formula(lhs);
    const PropertyReport r = equivalent(l, parse_formula(rhs), u, c);
    out.require(r.holds(), std::string(lhs) + " vs " + rhs + ": " + r.detail);
    const PropertyReport s = equivalent(l, simplify_F(l), u, c);
    out.require(s.holds(), std::string(lhs) + " vs its rewrite: " + s.detail);
  }
  out.details << std::size(cases) << " equivalences (dep, anon, inc, exc, ind, literals) over "
              << u.describe();
  return out.finish("atoms-F");
}

// ---------------------------------------------------------------- F

bool same(const SatTable& a, const SatTable& b) { return a.sat == b.sat; }

bool flat_table(const SatTable& t) { return closure_profile(t).flat; }

ExperimentResult F_properties(const ExperimentOptions& o) {
  Outcome out;
  const Universe u = universe(o);
  const CheckOptions c = check_options(o);
  PoolOptions p;
  p.seed = o.seed;
  p.count = o.pool_size;
  const std::vector<Formula> pool = generate_pool(p);
  std::size_t flat_count = 0;
  for (std::size_t i = 0; i < pool.size(); ++i) {
    const Formula& f = pool[i];
    const Formula& g = pool[(i + 1) % pool.size()];
    const std::string name = render(f);
    const SatTable tf = tabulate(f, u, c);
    const SatTable tF = tabulate(flat(f), u, c);
    out.require(flat_table(tF), "F of " + name + " is not flat");
    out.require(same(tabulate(flat(flat(f)), u, c), tF), "FF differs from F for " + name);
    out.require(same(tabulate(flat(conj(f, g)), u, c), tabulate(conj(flat(f), flat(g)), u, c)),
                "F does not distribute over & for " + name + " and " + render(g));
    const bool is_flat = flat_table(tf);
    flat_count += is_flat;
    out.require(is_flat == same(tF, tf), "flatness of " + name + " disagrees with F p == p");
  }
  out.details << pool.size() << " formulas (depth <= 4, seed " << o.seed << ", " << flat_count
              << " flat) over " << u.describe();
  return out.finish("F-properties");
}

ExperimentResult anon_sentence(const ExperimentOptions& o) {
  Outcome out;
  Structure s({"a"});
  const Formula phi = parse_formula("A x. E y. anon(x; y)");
  const Formula phi_f = flatten(phi, o.exclusion);
  for (const Strategy& st : {Strategy::naive(), o.strategy}) {
    const bool v = eval_sentence(s, phi, st, o.budget);
    const bool vf = eval_sentence(s, phi_f, st, o.budget);
    const bool vF = eval_sentence(s, flat(phi), st, o.budget);
    out.require(!v && vf && !vF, st.describe() + " gave " + yes_no(v) + "/" + yes_no(vf) + "/" +
                                     yes_no(vF));
  }
  out.details << "on M={a}: " << render(phi) << " false, flattening " << render(phi_f)
              << " true, F of it false";
  return out.finish("anon-sentence");
}

// ---------------------------------------------------------------- graphs

Structure random_graph(std::mt19937_64& rng, std::size_t n) {
  std::vector<std::string> dom;
  for (std::size_t i = 0; i < n; ++i) dom.push_back("v" + std::to_string(i));
  Structure s(dom);
  s.add_relation("E", 2);
  std::bernoulli_distribution edge(0.4);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j)
      if (edge(rng)) {
        s.add_tuple("E", {static_cast<ElemId>(i), static_cast<ElemId>(j)});
        s.add_tuple("E", {static_cast<ElemId>(j), static_cast<ElemId>(i)});
      }
  return s;
}

ExperimentResult disconnect(const ExperimentOptions& o) {
  Outcome out;
  const Formula phi = parse_formula(kDisconnectSentence);
  for (unsigned n = 0; n <= 2; ++n) {
    out.require(eval_sentence(gen_A(n), phi, o.strategy, o.budget),
                "false on A_" + std::to_string(n));
    out.require(!eval_sentence(gen_B(n), phi, o.strategy, o.budget),
                "true on B_" + std::to_string(n));
  }
  std::mt19937_64 rng(o.seed);
  std::size_t disconnected = 0;
  for (int i = 0; i < 20; ++i) {
    const std::size_t n = 1 + std::uniform_int_distribution<std::size_t>(0, 5)(rng);
    const Structure g = random_graph(rng, n);
    const bool expect = !is_connected(g, "E");
    disconnected += expect;
    out.require(eval_sentence(g, phi, o.strategy, o.budget) == expect,
                "random graph " + std::to_string(i) + " disagrees with BFS");
  }
  out.details << "true on A_0..A_2, false on B_0..B_2 (symmetric edges), agrees with BFS on 20 "
                 "random graphs with |V| <= 6 ("
              << disconnected << " disconnected)";
  return out.finish("disconnect");
}

ExperimentResult separate(const ExperimentOptions& o) {
  Outcome out;
  const Formula phi = parse_formula(kSeparatingSentence);
  const bool a1 = eval_sentence(gen_A(1), phi, o.strategy, o.budget);
  const bool b1 = eval_sentence(gen_B(1), phi, o.strategy, o.budget);
  out.require(a1, "false on A_1");
  out.require(!b1, "true on B_1");
  const bool a0 = eval_sentence(gen_A(0), phi, o.strategy, o.budget);
  const bool b0 = eval_sentence(gen_B(0), phi, o.strategy, o.budget);
  out.details << "A_1 " << yes_no(a1) << ", B_1 " << yes_no(b1)
              << " (symmetric edges); informational: A_0 " << yes_no(a0) << ", B_0 "
              << yes_no(b0);
  return out.finish("separate");
}

// ---------------------------------------------------------------- magma

ExperimentResult magma(const ExperimentOptions& o) {
  Structure s({"a", "b", "c"});
  const std::vector<Permutation> maps = automorphisms(s);
  PoolOptions p;
  p.seed = o.seed;
  p.count = 60;
  p.relations = {};
  p.unary_atoms = true;
  p.kinds = {Kind::Equal, Kind::NotEqual, Kind::Top,    Kind::Bot,   Kind::Anon,
             Kind::And,   Kind::Or,       Kind::Exists, Kind::Forall};
  std::vector<Formula> pool = {parse_formula("anon(x; y)")};
  for (const Formula& f : generate_pool(p)) pool.push_back(f);
  const PropertyReport r = magma_lemma_check(s, maps, pool, {"x", "y"}, check_options(o));
  std::size_t disagreeing = 0;
  if (r.refuted())
    for (const Formula& f : pool)
      disagreeing += magma_lemma_check(s, maps, {f}, {"x", "y"}, check_options(o)).refuted();

  ExperimentResult res;
  res.id = "magma";
  res.verdict = r.holds() ? Verdict::Pass : r.refuted() ? Verdict::Fail : Verdict::Inapplicable;
  res.details = std::to_string(pool.size()) + " unary-anonymity formulas, full symmetric group "
                "on an empty-signature structure of size 3: " + r.detail;
  if (r.refuted())
    res.details += "; " + std::to_string(disagreeing) + " of " + std::to_string(pool.size()) +
                   " formulas disagree with their flattening on some closed team";
  return res;
}

// ---------------------------------------------------------------- strategies

ExperimentResult strategy_agreement(const ExperimentOptions& o) {
  Outcome out;
  const Universe u = universe(o);
  PoolOptions p;
  p.seed = o.seed + 1;
  p.count = o.pool_size;
  const std::vector<Formula> pool = generate_pool(p);
  std::size_t hooks = 0, flats = 0;
  for (const Formula& f : pool) {
    const std::string text = render(f);
    hooks += text.find("=>") != std::string::npos;
    flats += text.find("F ") != std::string::npos;
    const SatTable a = tabulate(f, u, {Strategy::naive(), o.budget});
    const SatTable b = tabulate(f, u, {o.strategy, o.budget});
    out.require(same(a, b), "strategies disagree on " + text);
  }
  out.details << "naive and " << o.strategy.describe() << " agree on " << pool.size()
              << " formulas (" << hooks << " with =>, " << flats << " with F) over "
              << u.describe();
  return out.finish("strategy-agreement");
}

// ---------------------------------------------------------------- translation

ExperimentResult translation_F_case(const ExperimentOptions& o) {
  Outcome out;
  const Universe u = universe(o);
  PoolOptions p;
  p.seed = o.seed + 2;
  p.count = 24;
  p.max_depth = 3;
  p.kinds = {Kind::RelAtom, Kind::NegRelAtom, Kind::Equal,  Kind::NotEqual, Kind::Top,
             Kind::Bot,     Kind::And,        Kind::Or,     Kind::Exists,   Kind::Forall};
  const std::vector<Formula> bodies = generate_pool(p);
  std::size_t checks = 0;
  for (const Formula& psi : bodies)
    for (std::size_t k = 0; k < u.structures.size(); ++k)
      for (const Team& x : enumerate_teams(u.structures[k], u.vars)) {
        const PropertyReport r =
            check_translation_biconditional(u.structures[k], x, psi, psi, u.vars, check_options(o));
        ++checks;
        if (!r.holds()) out.require(false, u.names[k] + ": " + r.detail);
      }
  out.details << bodies.size() << " first-order bodies, " << checks
              << " (structure, team) pairs over " << u.describe();
  return out.finish("translation-F-case");
}

// ---------------------------------------------------------------- lattice

ExperimentResult closure_lattice(const ExperimentOptions& o) {
  Outcome out;
  const Universe u = universe(o);
  PoolOptions p;
  p.seed = o.seed + 3;
  p.count = o.pool_size;
  const std::vector<Formula> pool = generate_pool(p);
  std::size_t n_flat = 0, n_dc = 0, n_uc = 0, n_df = 0, n_uf = 0;
  for (const Formula& f : pool) {
    const ClosureProfile c = closure_profile(f, u, check_options(o));
    const std::string name = render(f);
    n_flat += c.flat;
    n_dc += c.dc;
    n_uc += c.uc;
    n_df += c.df;
    n_uf += c.uf;
    out.require(!c.flat || (c.dc && c.uc && c.df && c.uf), "flat without all others: " + name);
    out.require(!c.dc || c.df, "DC without DF: " + name);
    out.require(!c.uc || c.uf, "UC without UF: " + name);
    out.require(!(c.df && c.uf) || c.flat, "DF and UF without flat: " + name);
    out.require(!(c.dc && c.uc) || c.flat, "DC and UC without flat: " + name);
  }
  out.details << pool.size() << " formulas: " << n_flat << " flat, " << n_dc << " DC, " << n_uc
              << " UC, " << n_df << " DF, " << n_uf << " UF over " << u.describe();
  return out.finish("closure-lattice");
}

// ---------------------------------------------------------------- NE | NE

std::string relation_name(const SatTable& a, const SatTable& b) {
  bool a_to_b = true, b_to_a = true;
  for (std::size_t k = 0; k < a.sat.size(); ++k)
    for (std::size_t m = 0; m < a.sat[k].size(); ++m) {
      if (a.sat[k][m] && !b.sat[k][m]) a_to_b = false;
      if (b.sat[k][m] && !a.sat[k][m]) b_to_a = false;
    }
  if (a_to_b && b_to_a) return "equivalent";
  if (a_to_b) return "left entails right only";
  if (b_to_a) return "right entails left only";
  return "incomparable";
}

ExperimentResult ne_distribution(const ExperimentOptions& o) {
  Outcome out;
  const Universe u = universe(o);
  const Formula lhs = parse_formula("F (NE | NE)");
  const Formula rhs = parse_formula("F NE | F NE");
  std::string first;
  for (const Strategy& st : {Strategy::naive(), o.strategy}) {
    const std::string rel =
        relation_name(tabulate(lhs, u, {st, o.budget}), tabulate(rhs, u, {st, o.budget}));
    if (first.empty()) first = rel;
    out.require(rel == first, "verdict differs under " + st.describe());
  }
  out.details << render(lhs) << " vs " << render(rhs) << ": " << first << " over "
              << u.describe() << " (stable across strategies)";
  return out.finish("ne-distribution");
}

// ---------------------------------------------------------------- extras

ExperimentResult fo_flat(const ExperimentOptions& o) {
  Outcome out;
  const Universe u = universe(o);
  PoolOptions p;
  p.seed = o.seed + 4;
  p.count = 50;
  p.kinds = {Kind::RelAtom, Kind::NegRelAtom, Kind::Equal,  Kind::NotEqual, Kind::Top,
             Kind::Bot,     Kind::And,        Kind::Or,     Kind::Exists,   Kind::Forall};
  for (const Formula& f : generate_pool(p)) {
    const PropertyReport r = is_flat(f, u, check_options(o));
    out.require(r.holds(), render(f) + ": " + r.detail);
  }
  out.details << "50 first-order formulas are flat over " << u.describe();
  return out.finish("fo-flat");
}

ExperimentResult existential_dep(const ExperimentOptions& o) {
  Outcome out;
  const Universe u = universe(o);
  PoolOptions p;
  p.seed = o.seed + 5;
  p.count = 50;
  p.kinds = {Kind::RelAtom, Kind::NegRelAtom, Kind::Equal, Kind::NotEqual, Kind::Top,
             Kind::Bot,     Kind::Dep,        Kind::And,   Kind::Or,       Kind::Exists};
  for (const Formula& f : generate_pool(p)) {
    const PropertyReport r = equivalent(flat(f), flatten(f), u, check_options(o));
    out.require(r.holds(), render(f) + ": " + r.detail);
  }
  out.details << "F p equals the flattening of p for 50 existential dependence formulas over "
              << u.describe();
  return out.finish("existential-dep");
}

// The entailments need DF/UF of the body, used on the teams s[M/x] and
// s[H/x]. With the hypothesis on the quantified formula both quantifiers have
// counterexamples (A x. inc(y; x) is DF, its body is not). Pass requires the
// body reading; failures of the quantified reading are counted.
ExperimentResult quantifier_F(const ExperimentOptions& o) {
  Outcome out;
  const Universe u = universe(o);
  const CheckOptions c = check_options(o);
  PoolOptions p;
  p.seed = o.seed + 6;
  p.count = 60;
  p.max_depth = 3;
  p.kinds = flattenable_kinds();
  std::size_t df_cases = 0, uf_cases = 0, stated_cases = 0, stated_broken = 0;
  std::string first_broken;
  for (const Formula& body : generate_pool(p)) {
    const ClosureProfile bprof = closure_profile(body, u, c);
    for (const char* v : {"x", "y"}) {
      for (bool ex : {true, false}) {
        const Formula q = ex ? exists(v, body) : forall(v, body);
        const Formula q_of_F = ex ? exists(v, flat(body)) : forall(v, flat(body));
        const ClosureProfile qprof = closure_profile(q, u, c);
        if (!bprof.df && !bprof.uf && !qprof.df && !qprof.uf) continue;
        const bool down = entails(flat(q), q_of_F, u, c).holds();
        const bool up = entails(q_of_F, flat(q), u, c).holds();
        if (bprof.df) {
          ++df_cases;
          out.require(down, "DF body " + render(q));
        }
        if (bprof.uf) {
          ++uf_cases;
          out.require(up, "UF body " + render(q));
        }
        stated_cases += qprof.df || qprof.uf;
        const bool stated_bad = (qprof.df && !down) || (qprof.uf && !up);
        stated_broken += stated_bad;
        if (stated_bad && first_broken.empty()) first_broken = render(q);
      }
    }
  }
  out.details << df_cases << " quantified formulas with DF body and " << uf_cases
              << " with UF body commute with F in the stated direction; hypothesis on the"
                 " quantified formula: "
              << stated_broken << " of " << stated_cases << " fail";
  if (!first_broken.empty()) out.details << " (first: " << first_broken << ")";
  return out.finish("quantifier-F");
}

ExperimentResult closure_preservation(const ExperimentOptions& o) {
  Outcome out;
  const Universe u = universe(o);
  const CheckOptions c = check_options(o);
  PoolOptions p;
  p.seed = o.seed + 7;
  p.count = 100;
  std::size_t dc = 0, uc = 0;
  for (const Formula& f : generate_pool(p)) {
    const ClosureProfile a = closure_profile(f, u, c);
    const ClosureProfile b = closure_profile(flat(f), u, c);
    dc += a.dc;
    uc += a.uc;
    out.require(!a.dc || b.dc, "F loses downward closure: " + render(f));
    out.require(!a.uc || b.uc, "F loses union closure: " + render(f));
    out.require(!a.df || b.df, "F loses downward flatness: " + render(f));
    out.require(!a.uf || b.uf, "F loses upward flatness: " + render(f));
  }
  out.details << "F preserves DC, UC, DF, UF on 100 formulas (" << dc << " DC, " << uc
              << " UC) over " << u.describe();
  return out.finish("closure-preservation");
}

ExperimentResult sentence_F(const ExperimentOptions& o) {
  Outcome out;
  const Universe u = universe(o, {});
  PoolOptions p;
  p.seed = o.seed + 8;
  p.count = 100;
  p.max_depth = 4;
  std::size_t sentences = 0;
  for (const Formula& f : generate_pool(p)) {
    Formula g = f;
    for (const auto& v : free_variables(f)) g = exists(v, g);
    ++sentences;
    for (std::size_t k = 0; k < u.structures.size(); ++k) {
      const bool a = eval_sentence(u.structures[k], g, o.strategy, o.budget);
      const bool b = eval_sentence(u.structures[k], flat(g), o.strategy, o.budget);
      out.require(a == b, render(g) + " on " + u.names[k]);
    }
  }
  out.details << "F p agrees with p on {empty assignment} for " << sentences
              << " sentences over " << u.structures.size() << " structures";
  return out.finish("sentence-F");
}

struct Entry {
  ExperimentInfo info;
  std::function<ExperimentResult(const ExperimentOptions&)> run;
};

const std::vector<Entry>& registry() {
  static const std::vector<Entry> entries = {
      {{"atoms-flattening", "TOP flattens dep, anon, inc and ind; TOP and x != y both flatten exc (flattening axioms)"}, atoms_flattening},
      {{"atoms-F", "F on atoms: dep = TOP, anon = BOT, inc = equality, exc = inequality, ind = TOP, literals unchanged"}, atoms_F},
      {{"F-properties", "F p is flat, FF p = F p, F distributes over &, p flat iff F p = p"}, F_properties},
      {{"anon-sentence", "on one element, A x. E y. anon(x; y) is false, its flattening true, its F false"}, anon_sentence},
      {{"disconnect", "the FO(inc, F) sentence holds exactly on disconnected graphs"}, disconnect},
      {{"separate", "the FO(anon, F) sentence is true on two cycles and false on one cycle of the same size"}, separate},
      {{"magma", "unary anonymity formulas equal their flattening on teams closed under a unitary magma of automorphisms"}, magma},
      {{"strategy-agreement", "optimized evaluation agrees with naive evaluation"}, strategy_agreement},
      {{"translation-F-case", "F psi holds on X iff the translated first-order formula holds at every row, R read as X(xs)"}, translation_F_case},
      {{"closure-lattice", "implications between flat, DC, UC, DF and UF"}, closure_lattice},
      {{"ne-distribution", "measured relation between F(NE | NE) and F NE | F NE"}, ne_distribution},
      {{"fo-flat", "first-order formulas are flat"}, fo_flat},
      {{"existential-dep", "F p equals the flattening of p for existential dependence formulas"}, existential_dep},
      {{"quantifier-F", "F commutes with E and A in one direction under downward or upward flatness of the body"}, quantifier_F},
      {{"closure-preservation", "F preserves downward closure, union closure, DF and UF"}, closure_preservation},
      {{"sentence-F", "F p equals p on sentences"}, sentence_F},
  };
  return entries;
}

}  // namespace

const char* verdict_name(ExperimentResult::Verdict v) {
  switch (v) {
    case Verdict::Pass: return "PASS";
    case Verdict::Fail: return "FAIL";
    case Verdict::Inapplicable: return "INAPPLICABLE";
  }
  return "?";
}

const std::vector<ExperimentInfo>& experiment_list() {
  static const std::vector<ExperimentInfo> list = [] {
    std::vector<ExperimentInfo> out;
    for (const Entry& e : registry()) out.push_back(e.info);
    return out;
  }();
  return list;
}

ExperimentResult run_experiment(const std::string& id, const ExperimentOptions& opts) {
  for (const Entry& e : registry()) {
    if (e.info.id != id) continue;
    const auto start = std::chrono::steady_clock::now();
    ExperimentResult r;
    try {
      r = e.run(opts);
    } catch (const std::exception& ex) {
      r.id = id;
      r.verdict = Verdict::Fail;
      r.details = std::string("error: ") + ex.what();
    }
    r.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    return r;
  }
  throw std::invalid_argument("unknown experiment " + id);
}

std::string report_line(const ExperimentResult& r) {
  return r.id + "\t" + verdict_name(r.verdict) + "\t" + r.details;
}

}  // namespace flatteam
