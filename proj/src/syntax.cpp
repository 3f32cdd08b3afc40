#include "lpwb/syntax.hpp"

#include <algorithm>
#include <cctype>

namespace lpwb {

TermPtr mk_var(std::string name) {
  return std::make_shared<Term>(TermKind::Var, std::move(name), nullptr, nullptr);
}
TermPtr mk_const(std::string name) {
  return std::make_shared<Term>(TermKind::Const, std::move(name), nullptr, nullptr);
}
TermPtr mk_zero() {
  return std::make_shared<Term>(TermKind::Zero, "", nullptr, nullptr);
}
TermPtr mk_neg(TermPtr t) {
  return std::make_shared<Term>(TermKind::Neg, "", std::move(t), nullptr);
}
TermPtr mk_sum(TermPtr s, TermPtr t) {
  return std::make_shared<Term>(TermKind::Sum, "", std::move(s), std::move(t));
}
TermPtr mk_app(TermPtr s, TermPtr t) {
  return std::make_shared<Term>(TermKind::App, "", std::move(s), std::move(t));
}
TermPtr mk_bang(TermPtr t) {
  return std::make_shared<Term>(TermKind::Bang, "", std::move(t), nullptr);
}
TermPtr mk_one() { return mk_neg(mk_zero()); }
TermPtr mk_meet(TermPtr s, TermPtr t) {
  return mk_neg(mk_sum(mk_neg(std::move(s)), mk_neg(std::move(t))));
}

FormulaPtr mk_prop(std::string name) {
  return std::make_shared<Formula>(FormulaKind::Prop, std::move(name), nullptr, nullptr, nullptr, nullptr);
}
FormulaPtr mk_bottom() {
  return std::make_shared<Formula>(FormulaKind::Bottom, "", nullptr, nullptr, nullptr, nullptr);
}
FormulaPtr mk_not(FormulaPtr a) {
  return std::make_shared<Formula>(FormulaKind::Not, "", std::move(a), nullptr, nullptr, nullptr);
}
FormulaPtr mk_or(FormulaPtr a, FormulaPtr b) {
  return std::make_shared<Formula>(FormulaKind::Or, "", std::move(a), std::move(b), nullptr, nullptr);
}
FormulaPtr mk_just(TermPtr t, FormulaPtr a) {
  return std::make_shared<Formula>(FormulaKind::Just, "", std::move(a), nullptr, std::move(t), nullptr);
}
FormulaPtr mk_eq(TermPtr s, TermPtr t) {
  return std::make_shared<Formula>(FormulaKind::Eq, "", nullptr, nullptr, std::move(s), std::move(t));
}
FormulaPtr mk_top() { return mk_not(mk_bottom()); }
FormulaPtr mk_imp(FormulaPtr a, FormulaPtr b) { return mk_or(mk_not(std::move(a)), std::move(b)); }
FormulaPtr mk_and(FormulaPtr a, FormulaPtr b) {
  return mk_not(mk_or(mk_not(std::move(a)), mk_not(std::move(b))));
}
FormulaPtr mk_iff(FormulaPtr a, FormulaPtr b) {
  return mk_and(mk_imp(a, b), mk_imp(b, a));
}

int compare(const Term& a, const Term& b) {
  if (a.kind != b.kind) return static_cast<int>(a.kind) < static_cast<int>(b.kind) ? -1 : 1;
  if (int c = a.name.compare(b.name)) return c < 0 ? -1 : 1;
  auto cmp_child = [](const TermPtr& x, const TermPtr& y) -> int {
    if (!x && !y) return 0;
    if (!x) return -1;
    if (!y) return 1;
    return compare(*x, *y);
  };
  if (int c = cmp_child(a.left, b.left)) return c;
  return cmp_child(a.right, b.right);
}

int compare(const Formula& a, const Formula& b) {
  if (a.kind != b.kind) return static_cast<int>(a.kind) < static_cast<int>(b.kind) ? -1 : 1;
  if (int c = a.name.compare(b.name)) return c < 0 ? -1 : 1;
  auto cmp_t = [](const TermPtr& x, const TermPtr& y) -> int {
    if (!x && !y) return 0;
    if (!x) return -1;
    if (!y) return 1;
    return compare(*x, *y);
  };
  auto cmp_f = [](const FormulaPtr& x, const FormulaPtr& y) -> int {
    if (!x && !y) return 0;
    if (!x) return -1;
    if (!y) return 1;
    return compare(*x, *y);
  };
  if (int c = cmp_t(a.term, b.term)) return c;
  if (int c = cmp_t(a.term2, b.term2)) return c;
  if (int c = cmp_f(a.sub, b.sub)) return c;
  return cmp_f(a.sub2, b.sub2);
}

bool equal(const TermPtr& a, const TermPtr& b) {
  if (a.get() == b.get()) return true;
  if (!a || !b) return false;
  return compare(*a, *b) == 0;
}
bool equal(const FormulaPtr& a, const FormulaPtr& b) {
  if (a.get() == b.get()) return true;
  if (!a || !b) return false;
  return compare(*a, *b) == 0;
}

bool is_variable_name(const std::string& name) {
  return !name.empty() && (name[0] == 'x' || name[0] == 'y' || name[0] == 'z');
}

bool is_identifier(const std::string& name) {
  if (name.empty()) return false;
  if (!std::isalpha(static_cast<unsigned char>(name[0])) && name[0] != '_') return false;
  for (char c : name)
    if (!std::isalnum(static_cast<unsigned char>(c)) && c != '_') return false;
  return name != "bot" && name != "top";
}

bool term_in_dialect(const TermPtr& t, Dialect d) {
  if (d == Dialect::LPB) return true;
  switch (t->kind) {
    case TermKind::Zero:
    case TermKind::Neg: return false;
    case TermKind::Var:
    case TermKind::Const: return true;
    case TermKind::Bang: return term_in_dialect(t->left, d);
    case TermKind::Sum:
    case TermKind::App: return term_in_dialect(t->left, d) && term_in_dialect(t->right, d);
  }
  return false;
}

bool formula_in_dialect(const FormulaPtr& f, Dialect d) {
  if (d == Dialect::LPB) return true;
  switch (f->kind) {
    case FormulaKind::Eq: return false;
    case FormulaKind::Prop:
    case FormulaKind::Bottom: return true;
    case FormulaKind::Not: return formula_in_dialect(f->sub, d);
    case FormulaKind::Or: return formula_in_dialect(f->sub, d) && formula_in_dialect(f->sub2, d);
    case FormulaKind::Just: return term_in_dialect(f->term, d) && formula_in_dialect(f->sub, d);
  }
  return false;
}

std::size_t term_size(const TermPtr& t) {
  std::size_t n = 1;
  if (t->left) n += term_size(t->left);
  if (t->right) n += term_size(t->right);
  return n;
}

std::size_t formula_size(const FormulaPtr& f) {
  std::size_t n = 1;
  if (f->sub) n += formula_size(f->sub);
  if (f->sub2) n += formula_size(f->sub2);
  if (f->term) n += term_size(f->term);
  if (f->term2) n += term_size(f->term2);
  return n;
}

bool match_imp(const FormulaPtr& f, FormulaPtr& lhs, FormulaPtr& rhs) {
  if (f->kind != FormulaKind::Or || f->sub->kind != FormulaKind::Not) return false;
  lhs = f->sub->sub;
  rhs = f->sub2;
  return true;
}

bool match_iff(const FormulaPtr& f, FormulaPtr& lhs, FormulaPtr& rhs) {
  // a <-> b is ~(~(a->b) | ~(b->a))
  if (f->kind != FormulaKind::Not || f->sub->kind != FormulaKind::Or) return false;
  const FormulaPtr& l = f->sub->sub;
  const FormulaPtr& r = f->sub->sub2;
  if (l->kind != FormulaKind::Not || r->kind != FormulaKind::Not) return false;
  FormulaPtr a1, b1, b2, a2;
  if (!match_imp(l->sub, a1, b1) || !match_imp(r->sub, b2, a2)) return false;
  if (!equal(a1, a2) || !equal(b1, b2)) return false;
  lhs = a1;
  rhs = b1;
  return true;
}

namespace {
void collect_subterms(const TermPtr& t, TermSet& out) {
  if (!out.insert(t).second) return;
  if (t->left) collect_subterms(t->left, out);
  if (t->right) collect_subterms(t->right, out);
}
void collect_subformulas(const FormulaPtr& f, FormulaSet& out) {
  if (!out.insert(f).second) return;
  if (f->sub) collect_subformulas(f->sub, out);
  if (f->sub2) collect_subformulas(f->sub2, out);
}
void collect_terms_of(const FormulaPtr& f, TermSet& out) {
  if (f->term) collect_subterms(f->term, out);
  if (f->term2) collect_subterms(f->term2, out);
  if (f->sub) collect_terms_of(f->sub, out);
  if (f->sub2) collect_terms_of(f->sub2, out);
}
} // namespace

TermSet subterms(const TermPtr& t) {
  TermSet out;
  collect_subterms(t, out);
  return out;
}

FormulaSet subformulas(const FormulaPtr& f) {
  FormulaSet out;
  collect_subformulas(f, out);
  return out;
}

TermSet terms_of(const FormulaPtr& f) {
  TermSet out;
  collect_terms_of(f, out);
  return out;
}

std::set<std::string> props_of(const FormulaPtr& f) {
  std::set<std::string> out;
  for (const auto& g : subformulas(f))
    if (g->kind == FormulaKind::Prop) out.insert(g->name);
  return out;
}

std::set<std::string> vars_of(const TermPtr& t) {
  std::set<std::string> out;
  for (const auto& s : subterms(t))
    if (s->kind == TermKind::Var) out.insert(s->name);
  return out;
}

std::set<std::string> consts_of(const TermPtr& t) {
  std::set<std::string> out;
  for (const auto& s : subterms(t))
    if (s->kind == TermKind::Const) out.insert(s->name);
  return out;
}

ParseError::ParseError(std::string msg, std::size_t pos)
    : std::runtime_error(msg + " (at position " + std::to_string(pos) + ")"), position(pos) {}

namespace {

enum class Tok {
  Ident, Zero, One, LParen, RParen,
  Star, Dot, Plus, Minus, Bang, Colon,
  Tilde, Amp, Pipe, Arrow, Iff, Equals,
  Bot, Top, End
};

struct Token {
  Tok kind;
  std::string text;
  std::size_t pos;
};

// ASCII surface syntax with Unicode aliases accepted on input.
std::vector<Token> lex(const std::string& s) {
  std::vector<Token> out;
  std::size_t i = 0;
  auto starts = [&](const char* u) {
    std::size_t n = std::char_traits<char>::length(u);
    return s.compare(i, n, u) == 0;
  };
  while (i < s.size()) {
    char c = s[i];
    if (std::isspace(static_cast<unsigned char>(c))) { ++i; continue; }
    std::size_t pos = i;
    if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
      std::size_t j = i;
      while (j < s.size() && (std::isalnum(static_cast<unsigned char>(s[j])) || s[j] == '_')) ++j;
      std::string word = s.substr(i, j - i);
      i = j;
      if (word == "bot") out.push_back({Tok::Bot, word, pos});
      else if (word == "top") out.push_back({Tok::Top, word, pos});
      else out.push_back({Tok::Ident, word, pos});
      continue;
    }
    if (c == '0') { out.push_back({Tok::Zero, "0", pos}); ++i; continue; }
    if (c == '1') { out.push_back({Tok::One, "1", pos}); ++i; continue; }
    if (starts("<->")) { out.push_back({Tok::Iff, "<->", pos}); i += 3; continue; }
    if (starts("->")) { out.push_back({Tok::Arrow, "->", pos}); i += 2; continue; }
    if (starts("\xe2\x86\x92")) { out.push_back({Tok::Arrow, "->", pos}); i += 3; continue; }   // →
    if (starts("\xe2\x86\x94")) { out.push_back({Tok::Iff, "<->", pos}); i += 3; continue; }    // ↔
    if (starts("\xc2\xac")) { out.push_back({Tok::Tilde, "~", pos}); i += 2; continue; }        // ¬
    if (starts("\xe2\x88\xa8")) { out.push_back({Tok::Pipe, "|", pos}); i += 3; continue; }     // ∨
    if (starts("\xe2\x88\xa7")) { out.push_back({Tok::Amp, "&", pos}); i += 3; continue; }      // ∧
    if (starts("\xe2\x8a\xa5")) { out.push_back({Tok::Bot, "bot", pos}); i += 3; continue; }    // ⊥
    if (starts("\xe2\x8a\xa4")) { out.push_back({Tok::Top, "top", pos}); i += 3; continue; }    // ⊤
    if (starts("\xe2\x89\x88")) { out.push_back({Tok::Equals, "=", pos}); i += 3; continue; }   // ≈
    if (starts("\xc2\xb7")) { out.push_back({Tok::Star, "*", pos}); i += 2; continue; }         // ·
    if (starts("\xe2\x8a\x99")) { out.push_back({Tok::Dot, ".", pos}); i += 3; continue; }      // ⊙
    switch (c) {
      case '(': out.push_back({Tok::LParen, "(", pos}); break;
      case ')': out.push_back({Tok::RParen, ")", pos}); break;
      case '*': out.push_back({Tok::Star, "*", pos}); break;
      case '.': out.push_back({Tok::Dot, ".", pos}); break;
      case '+': out.push_back({Tok::Plus, "+", pos}); break;
      case '-': out.push_back({Tok::Minus, "-", pos}); break;
      case '!': out.push_back({Tok::Bang, "!", pos}); break;
      case ':': out.push_back({Tok::Colon, ":", pos}); break;
      case '~': out.push_back({Tok::Tilde, "~", pos}); break;
      case '&': out.push_back({Tok::Amp, "&", pos}); break;
      case '|': out.push_back({Tok::Pipe, "|", pos}); break;
      case '=': out.push_back({Tok::Equals, "=", pos}); break;
      default:
        throw ParseError("unexpected character '" + std::string(1, c) + "'", pos);
    }
    ++i;
  }
  out.push_back({Tok::End, "", s.size()});
  return out;
}

class Parser {
public:
  Parser(std::vector<Token> toks, Dialect d) : toks_(std::move(toks)), dialect_(d) {}

  TermPtr parse_term_all() {
    TermPtr t = term();
    expect_end();
    return t;
  }

  FormulaPtr parse_formula_all() {
    FormulaPtr f = formula();
    expect_end();
    return f;
  }

private:
  std::vector<Token> toks_;
  std::size_t pos_ = 0;
  Dialect dialect_;

  const Token& peek() const { return toks_[pos_]; }
  Token next() { return toks_[pos_++]; }
  bool accept(Tok k) {
    if (peek().kind == k) { ++pos_; return true; }
    return false;
  }
  void expect_end() {
    if (peek().kind != Tok::End)
      throw ParseError("trailing input after expression", peek().pos);
  }
  void require_lpb(const Token& t) {
    if (dialect_ != Dialect::LPB)
      throw ParseError("'" + t.text + "' requires dialect LPB", t.pos);
  }

  // term := meet-sum chain; precedence ! - > * > . > +
  TermPtr term() {
    TermPtr acc = meet();
    while (peek().kind == Tok::Plus) { next(); acc = mk_sum(acc, meet()); }
    return acc;
  }
  TermPtr meet() {
    TermPtr acc = app();
    while (peek().kind == Tok::Dot) {
      Token tok = next();
      require_lpb(tok);
      acc = mk_meet(acc, app());
    }
    return acc;
  }
  TermPtr app() {
    TermPtr acc = prefix();
    while (peek().kind == Tok::Star) { next(); acc = mk_app(acc, prefix()); }
    return acc;
  }
  TermPtr prefix() {
    if (peek().kind == Tok::Minus) {
      Token tok = next();
      require_lpb(tok);
      return mk_neg(prefix());
    }
    if (peek().kind == Tok::Bang) { next(); return mk_bang(prefix()); }
    return term_atom();
  }
  TermPtr term_atom() {
    Token tok = next();
    switch (tok.kind) {
      case Tok::Ident:
        return is_variable_name(tok.text) ? mk_var(tok.text) : mk_const(tok.text);
      case Tok::Zero:
        require_lpb(tok);
        return mk_zero();
      case Tok::One:
        require_lpb(tok);
        return mk_one();
      case Tok::LParen: {
        TermPtr t = term();
        if (!accept(Tok::RParen)) throw ParseError("expected ')'", peek().pos);
        return t;
      }
      default:
        throw ParseError("expected a term", tok.pos);
    }
  }

  // formula := iff; precedence : > ~ > & > | > -> > <->
  FormulaPtr formula() {
    FormulaPtr acc = imp();
    while (peek().kind == Tok::Iff) { next(); acc = mk_iff(acc, imp()); }
    return acc;
  }
  FormulaPtr imp() {
    FormulaPtr lhs = disj();
    if (accept(Tok::Arrow)) return mk_imp(lhs, imp()); // right-assoc
    return lhs;
  }
  FormulaPtr disj() {
    FormulaPtr acc = conj();
    while (peek().kind == Tok::Pipe) { next(); acc = mk_or(acc, conj()); }
    return acc;
  }
  FormulaPtr conj() {
    FormulaPtr acc = unary();
    while (peek().kind == Tok::Amp) { next(); acc = mk_and(acc, unary()); }
    return acc;
  }
  FormulaPtr unary() {
    if (accept(Tok::Tilde)) return mk_not(unary());
    return primary(/*allow_eq=*/true);
  }

  static bool starts_term(Tok k) {
    return k == Tok::Ident || k == Tok::Zero || k == Tok::One || k == Tok::Minus ||
           k == Tok::Bang || k == Tok::LParen;
  }

  // A primary is bot/top, a parenthesized formula, a proposition, t:unit,
  // or (dialect LPB, when allowed) s = t. An identifier is read as a term
  // first and reinterpreted as a proposition when no ':'/'=' follows.
  FormulaPtr primary(bool allow_eq) {
    const Token& tok = peek();
    if (tok.kind == Tok::Bot) { next(); return mk_bottom(); }
    if (tok.kind == Tok::Top) { next(); return mk_top(); }
    if (!starts_term(tok.kind)) throw ParseError("expected a formula", tok.pos);

    if (tok.kind == Tok::LParen) {
      // Could be a parenthesized term followed by ':'/'=' or a formula.
      std::size_t save = pos_;
      bool term_route = false;
      TermPtr t;
      try {
        t = term();
        term_route = peek().kind == Tok::Colon || (allow_eq && peek().kind == Tok::Equals);
      } catch (const ParseError&) {
        term_route = false;
      }
      if (term_route) return after_term(t, allow_eq);
      pos_ = save;
      next(); // '('
      FormulaPtr f = formula();
      if (!accept(Tok::RParen)) throw ParseError("expected ')'", peek().pos);
      return f;
    }

    std::size_t save = pos_;
    TermPtr t = term();
    if (peek().kind == Tok::Colon || (allow_eq && peek().kind == Tok::Equals))
      return after_term(t, allow_eq);
    // Lone identifier: a propositional atom.
    if (pos_ == save + 1 && toks_[save].kind == Tok::Ident)
      return mk_prop(toks_[save].text);
    throw ParseError("expected ':' or '=' after term", peek().pos);
  }

  FormulaPtr after_term(TermPtr t, bool allow_eq) {
    if (accept(Tok::Colon)) return mk_just(std::move(t), just_unit());
    Token eq = next(); // '='
    if (!allow_eq) throw ParseError("'=' not allowed here; parenthesize", eq.pos);
    require_lpb(eq);
    return mk_eq(std::move(t), term());
  }

  // ':' consumes the smallest following unit: an atom, bot/top, a
  // parenthesized formula, or another ':' chain (right-assoc).
  FormulaPtr just_unit() {
    const Token& tok = peek();
    if (tok.kind == Tok::Bot) { next(); return mk_bottom(); }
    if (tok.kind == Tok::Top) { next(); return mk_top(); }
    if (tok.kind == Tok::LParen) {
      std::size_t save = pos_;
      bool term_route = false;
      TermPtr t;
      try {
        t = term();
        term_route = peek().kind == Tok::Colon;
      } catch (const ParseError&) {
        term_route = false;
      }
      if (term_route) { next(); return mk_just(t, just_unit()); }
      pos_ = save;
      next();
      FormulaPtr f = formula();
      if (!accept(Tok::RParen)) throw ParseError("expected ')'", peek().pos);
      return f;
    }
    if (!starts_term(tok.kind)) throw ParseError("expected a formula after ':'", tok.pos);
    std::size_t save = pos_;
    TermPtr t = term();
    if (accept(Tok::Colon)) return mk_just(std::move(t), just_unit());
    if (pos_ == save + 1 && toks_[save].kind == Tok::Ident)
      return mk_prop(toks_[save].text);
    throw ParseError("expected ':' after term", peek().pos);
  }
};

} // namespace

TermPtr parse_term(const std::string& text, Dialect dialect) {
  Parser p(lex(text), dialect);
  return p.parse_term_all();
}

FormulaPtr parse_formula(const std::string& text, Dialect dialect) {
  Parser p(lex(text), dialect);
  return p.parse_formula_all();
}

namespace {

// Term precedence levels: Sum 1, App 2, prefix 3, atoms 4.
int term_level(const Term& t) {
  switch (t.kind) {
    case TermKind::Sum: return 1;
    case TermKind::App: return 2;
    case TermKind::Neg:
    case TermKind::Bang: return 3;
    default: return 4;
  }
}

void print_term_rec(const TermPtr& t, int min_level, std::string& out) {
  int lv = term_level(*t);
  bool parens = lv < min_level;
  if (parens) out += '(';
  switch (t->kind) {
    case TermKind::Var:
    case TermKind::Const: out += t->name; break;
    case TermKind::Zero: out += '0'; break;
    case TermKind::Neg:
      out += '-';
      print_term_rec(t->left, 3, out);
      break;
    case TermKind::Bang:
      out += '!';
      print_term_rec(t->left, 3, out);
      break;
    case TermKind::Sum:
      print_term_rec(t->left, 1, out);
      out += " + ";
      print_term_rec(t->right, 2, out);
      break;
    case TermKind::App:
      print_term_rec(t->left, 2, out);
      out += '*';
      print_term_rec(t->right, 3, out);
      break;
  }
  if (parens) out += ')';
}

// Formula levels: Or 1, Not 2, Just/Eq 3, atoms 4.
int formula_level(const Formula& f) {
  switch (f.kind) {
    case FormulaKind::Or: return 1;
    case FormulaKind::Not: return 2;
    case FormulaKind::Just:
    case FormulaKind::Eq: return 3;
    default: return 4;
  }
}

void print_formula_rec(const FormulaPtr& f, int min_level, std::string& out) {
  int lv = formula_level(*f);
  bool parens = lv < min_level;
  if (parens) out += '(';
  switch (f->kind) {
    case FormulaKind::Prop: out += f->name; break;
    case FormulaKind::Bottom: out += "bot"; break;
    case FormulaKind::Not:
      out += '~';
      print_formula_rec(f->sub, 2, out);
      break;
    case FormulaKind::Or:
      print_formula_rec(f->sub, 1, out);
      out += " | ";
      print_formula_rec(f->sub2, 2, out);
      break;
    case FormulaKind::Just: {
      print_term_rec(f->term, 4, out); // a ':' follows: atoms only, else parens
      out += ':';
      const Formula& body = *f->sub;
      bool unit = body.kind == FormulaKind::Prop || body.kind == FormulaKind::Bottom ||
                  body.kind == FormulaKind::Just;
      if (unit) {
        print_formula_rec(f->sub, 0, out);
      } else {
        out += '(';
        print_formula_rec(f->sub, 0, out);
        out += ')';
      }
      break;
    }
    case FormulaKind::Eq:
      print_term_rec(f->term, 1, out);
      out += " = ";
      print_term_rec(f->term2, 1, out);
      break;
  }
  if (parens) out += ')';
}

} // namespace

std::string print(const TermPtr& t) {
  std::string out;
  print_term_rec(t, 0, out);
  return out;
}

std::string print(const FormulaPtr& f) {
  std::string out;
  print_formula_rec(f, 0, out);
  return out;
}

FormulaSet closure_universe(const std::vector<FormulaPtr>& seeds, std::size_t depth) {
  FormulaSet universe;
  TermSet wrap_terms;
  for (const auto& f : seeds) {
    collect_subformulas(f, universe);
    collect_terms_of(f, wrap_terms);
  }
  for (std::size_t round = 0; round < depth; ++round) {
    FormulaSet next = universe;
    for (const auto& t : wrap_terms)
      for (const auto& f : universe) collect_subformulas(mk_just(t, f), next);
    universe.swap(next);
  }
  return universe;
}

} // namespace lpwb
