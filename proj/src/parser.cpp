#include "flatteam/parser.hpp"

#include <cctype>
#include <map>
#include <optional>
#include <set>

namespace flatteam {

ParseError::ParseError(const std::string& what, std::size_t position)
    : FormulaError(what + " at position " + std::to_string(position)),
      position_(position) {}

namespace {

enum class Tok {
  Ident,
  Const,  // #name
  LParen,
  RParen,
  Comma,
  Semi,
  Dot,
  Eq,
  Neq,
  Bang,
  Amp,
  Bar,
  Arrow,
  End,
};

struct Token {
  Tok kind;
  std::string text;
  std::size_t pos;
};

bool ident_char(char c) {
  return std::isalnum(static_cast<unsigned char>(c)) || c == '_';
}

std::vector<Token> tokenize(std::string_view s) {
  std::vector<Token> out;
  std::size_t i = 0;
  while (i < s.size()) {
    const char c = s[i];
    if (std::isspace(static_cast<unsigned char>(c))) {
      ++i;
      continue;
    }
    const std::size_t start = i;
    if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
      while (i < s.size() && ident_char(s[i])) ++i;
      out.push_back({Tok::Ident, std::string(s.substr(start, i - start)), start});
      continue;
    }
    if (c == '#') {
      ++i;
      while (i < s.size() && ident_char(s[i])) ++i;
      if (i == start + 1) throw ParseError("expected constant name after '#'", start);
      out.push_back({Tok::Const, std::string(s.substr(start + 1, i - start - 1)), start});
      continue;
    }
    auto two = [&](char a, char b) {
      return c == a && i + 1 < s.size() && s[i + 1] == b;
    };
    if (two('!', '=')) {
      out.push_back({Tok::Neq, "!=", start});
      i += 2;
      continue;
    }
    if (two('=', '>')) {
      out.push_back({Tok::Arrow, "=>", start});
      i += 2;
      continue;
    }
    Tok k;
    switch (c) {
      case '(': k = Tok::LParen; break;
      case ')': k = Tok::RParen; break;
      case ',': k = Tok::Comma; break;
      case ';': k = Tok::Semi; break;
      case '.': k = Tok::Dot; break;
      case '=': k = Tok::Eq; break;
      case '!': k = Tok::Bang; break;
      case '&': k = Tok::Amp; break;
      case '|': k = Tok::Bar; break;
      default:
        throw ParseError(std::string("unexpected character '") + c + "'", start);
    }
    out.push_back({k, std::string(1, c), start});
    ++i;
  }
  out.push_back({Tok::End, "", s.size()});
  return out;
}

const std::set<std::string>& keywords() {
  static const std::set<std::string> kw = {
      "F",     "neg", "some",     "TOP", "BOT", "NE",  "dep",
      "const", "anon", "nonconst", "inc", "exc", "ind", "vv"};
  return kw;
}

class Parser {
 public:
  explicit Parser(std::string_view text) : toks_(tokenize(text)) {}

  Formula parse() {
    Formula f = boolor();
    if (peek().kind != Tok::End) fail("unexpected '" + peek().text + "'");
    return f;
  }

 private:
  const Token& peek(std::size_t k = 0) const {
    return toks_[std::min(pos_ + k, toks_.size() - 1)];
  }
  const Token& next() { return toks_[pos_ < toks_.size() - 1 ? pos_++ : pos_]; }
  bool accept(Tok k) {
    if (peek().kind != k) return false;
    ++pos_;
    return true;
  }
  void expect(Tok k, const char* what) {
    if (!accept(k)) fail(std::string("expected ") + what);
  }
  bool at_keyword(const char* kw) const {
    return peek().kind == Tok::Ident && peek().text == kw;
  }
  [[noreturn]] void fail(const std::string& msg) const {
    throw ParseError(msg, peek().pos);
  }

  Formula boolor() {
    Formula f = hook_level();
    while (at_keyword("vv")) {
      ++pos_;
      f = bool_or(f, hook_level());
    }
    return f;
  }

  Formula hook_level() {
    const std::size_t start = peek().pos;
    Formula guard = or_level();
    if (!accept(Tok::Arrow)) return guard;
    if (!guard.is_first_order())
      throw ParseError("team atom inside hook guard: the guard must be first-order", start);
    return hook(guard, hook_level());
  }

  Formula or_level() {
    Formula f = and_level();
    while (accept(Tok::Bar)) f = disj(f, and_level());
    return f;
  }

  Formula and_level() {
    Formula f = unary();
    while (accept(Tok::Amp)) f = conj(f, unary());
    return f;
  }

  Formula unary() {
    if (at_keyword("F")) {
      ++pos_;
      return flat(unary());
    }
    if (at_keyword("neg")) {
      ++pos_;
      return bool_neg(unary());
    }
    if (at_keyword("some")) {
      ++pos_;
      return some_row(unary());
    }
    if (peek().kind == Tok::Bang) {
      const std::size_t at = next().pos;
      Formula inner = unary();
      if (!inner.is_first_order())
        throw ParseError("'!' applies to first-order formulas only; use 'neg' for "
                         "Boolean negation",
                         at);
      return nnf_negate(inner);
    }
    return primary();
  }

  bool at_quantifier() const {
    return peek().kind == Tok::Ident && (peek().text == "E" || peek().text == "A") &&
           peek(1).kind == Tok::Ident && peek(2).kind == Tok::Dot;
  }

  Formula primary() {
    if (at_quantifier()) {
      const bool is_exists = next().text == "E";
      const Token& v = next();
      if (keywords().count(v.text)) throw ParseError("reserved word as variable", v.pos);
      expect(Tok::Dot, "'.'");
      Formula body = boolor();
      return is_exists ? exists(v.text, body) : forall(v.text, body);
    }
    if (accept(Tok::LParen)) {
      Formula f = boolor();
      expect(Tok::RParen, "')'");
      return f;
    }
    const Token& t = peek();
    if (t.kind == Tok::Const) return equality();
    if (t.kind != Tok::Ident) fail("expected a formula");
    if (t.text == "TOP") return ++pos_, top();
    if (t.text == "BOT") return ++pos_, bot();
    if (t.text == "NE") return ++pos_, ne();
    if (t.text == "dep" || t.text == "anon") return dependency_atom(t.text == "dep");
    if (t.text == "const" || t.text == "nonconst") {
      const bool is_dep = t.text == "const";
      ++pos_;
      expect(Tok::LParen, "'('");
      Term y = term();
      expect(Tok::RParen, "')'");
      return is_dep ? dep({}, y) : anon({}, y);
    }
    if (t.text == "inc" || t.text == "exc") return pair_atom(t.text == "inc");
    if (t.text == "ind") return independence_atom();
    if (keywords().count(t.text)) fail("unexpected keyword '" + t.text + "'");
    if (peek(1).kind == Tok::LParen) return relation_atom();
    return equality();
  }

  Term term() {
    const Token& t = peek();
    if (t.kind == Tok::Const) {
      ++pos_;
      return Term::constant(t.text);
    }
    if (t.kind == Tok::Ident && !keywords().count(t.text)) {
      ++pos_;
      return Term::var(t.text);
    }
    fail("expected a term");
  }

  // Possibly empty comma-separated list, stopped by ';' or ')'.
  Tuple term_list() {
    Tuple out;
    if (peek().kind == Tok::Semi || peek().kind == Tok::RParen) return out;
    out.push_back(term());
    while (accept(Tok::Comma)) out.push_back(term());
    return out;
  }

  Formula equality() {
    Term a = term();
    if (accept(Tok::Eq)) return eq(a, term());
    if (accept(Tok::Neq)) return neq(a, term());
    fail("expected '=' or '!='");
  }

  Formula relation_atom() {
    const Token& name = next();
    expect(Tok::LParen, "'('");
    Tuple args = term_list();
    expect(Tok::RParen, "')'");
    auto [it, fresh] = arities_.emplace(name.text, args.size());
    if (!fresh && it->second != args.size())
      throw ParseError("arity mismatch for relation " + name.text, name.pos);
    return rel(name.text, std::move(args));
  }

  Formula dependency_atom(bool is_dep) {
    const std::size_t at = next().pos;
    expect(Tok::LParen, "'('");
    Tuple xs = term_list();
    if (accept(Tok::Semi)) {
      Term y = term();
      expect(Tok::RParen, "')'");
      return is_dep ? dep(std::move(xs), y) : anon(std::move(xs), y);
    }
    expect(Tok::RParen, "')'");
    if (xs.size() != 1)
      throw ParseError("expected ';' separating the determining tuple from the target", at);
    return is_dep ? dep({}, xs[0]) : anon({}, xs[0]);
  }

  Formula pair_atom(bool is_inc) {
    const std::size_t at = next().pos;
    expect(Tok::LParen, "'('");
    Tuple xs = term_list();
    expect(Tok::Semi, "';'");
    Tuple ys = term_list();
    expect(Tok::RParen, "')'");
    if (xs.size() != ys.size()) throw ParseError("arity mismatch between tuples", at);
    return is_inc ? inc(std::move(xs), std::move(ys)) : exc(std::move(xs), std::move(ys));
  }

  Formula independence_atom() {
    ++pos_;
    expect(Tok::LParen, "'('");
    Tuple a = term_list();
    expect(Tok::Semi, "';'");
    Tuple b = term_list();
    expect(Tok::Semi, "';'");
    Tuple c = term_list();
    expect(Tok::RParen, "')'");
    return ind(std::move(a), std::move(b), std::move(c));
  }

  std::vector<Token> toks_;
  std::size_t pos_ = 0;
  std::map<std::string, std::size_t> arities_;
};

// ---------------------------------------------------------------- printing

enum Prec { kBoolOr = 1, kHook = 2, kOr = 3, kAnd = 4, kPrefix = 5, kAtom = 6 };

std::string join(const Tuple& t, const char* sep) {
  std::string out;
  for (std::size_t i = 0; i < t.size(); ++i) {
    if (i) out += sep;
    out += render(t[i]);
  }
  return out;
}

int precedence(const Formula& f) {
  switch (f.kind()) {
    case Kind::BoolOr: return kBoolOr;
    case Kind::Hook: return kHook;
    case Kind::Or: return kOr;
    case Kind::And: return kAnd;
    case Kind::Flat:
    case Kind::BoolNeg:
    case Kind::SomeRow:
      return kPrefix;
    default:
      return kAtom;
  }
}

bool is_binder(const Formula& f) {
  return f.kind() == Kind::Exists || f.kind() == Kind::Forall;
}

// `open_right` is true when nothing follows the printed text inside the
// current parenthesis level, so a binder may extend to the right unbracketed.
std::string print(const Formula& f, int min_prec, bool open_right);

std::string print_inner(const Formula& f, bool open_right) {
  switch (f.kind()) {
    case Kind::RelAtom: return f.symbol() + "(" + join(f.tuple(0), ",") + ")";
    case Kind::NegRelAtom: return "!" + f.symbol() + "(" + join(f.tuple(0), ",") + ")";
    case Kind::Equal: return render(f.tuple(0)[0]) + "=" + render(f.tuple(0)[1]);
    case Kind::NotEqual: return render(f.tuple(0)[0]) + "!=" + render(f.tuple(0)[1]);
    case Kind::Top: return "TOP";
    case Kind::Bot: return "BOT";
    case Kind::NE: return "NE";
    case Kind::Dep:
    case Kind::Anon: {
      const bool d = f.kind() == Kind::Dep;
      if (f.tuple(0).empty())
        return std::string(d ? "const(" : "nonconst(") + render(f.tuple(1)[0]) + ")";
      return std::string(d ? "dep(" : "anon(") + join(f.tuple(0), ", ") + "; " +
             render(f.tuple(1)[0]) + ")";
    }
    case Kind::Incl:
    case Kind::Excl: {
      std::string a = join(f.tuple(0), ", "), b = join(f.tuple(1), ", ");
      return std::string(f.kind() == Kind::Incl ? "inc(" : "exc(") + a +
             (a.empty() ? ";" : "; ") + b + ")";
    }
    case Kind::Ind: {
      std::string out = "ind(";
      for (std::size_t i = 0; i < 3; ++i) {
        if (i) out += f.tuple(i).empty() ? ";" : "; ";
        out += join(f.tuple(i), ", ");
      }
      return out + ")";
    }
    case Kind::And:
      return print(f.left(), kAnd, false) + " & " + print(f.right(), kAnd + 1, open_right);
    case Kind::Or:
      return print(f.left(), kOr, false) + " | " + print(f.right(), kOr + 1, open_right);
    case Kind::BoolOr:
      return print(f.left(), kBoolOr, false) + " vv " +
             print(f.right(), kBoolOr + 1, open_right);
    case Kind::Hook:
      return print(f.left(), kHook + 1, false) + " => " + print(f.right(), kHook, open_right);
    case Kind::Flat: return "F " + print(f.body(), kPrefix, open_right);
    case Kind::BoolNeg: return "neg " + print(f.body(), kPrefix, open_right);
    case Kind::SomeRow: return "some " + print(f.body(), kPrefix, open_right);
    case Kind::Exists:
    case Kind::Forall:
      return std::string(f.kind() == Kind::Exists ? "E " : "A ") + f.symbol() + ". " +
             print(f.body(), 0, true);
  }
  return "?";
}

std::string print(const Formula& f, int min_prec, bool open_right) {
  const bool parens = precedence(f) < min_prec || (is_binder(f) && !open_right);
  if (parens) return "(" + print_inner(f, true) + ")";
  return print_inner(f, open_right);
}

}  // namespace

Formula parse_formula(std::string_view text) { return Parser(text).parse(); }

std::string render(const Term& t) {
  return t.is_var() ? t.name : "#" + t.name;
}

std::string render(const Formula& f) { return print(f, 0, true); }

}  // namespace flatteam
