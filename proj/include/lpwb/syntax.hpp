#pragma once

#include <cstddef>
#include <memory>
#include <set>
#include <stdexcept>
#include <string>
#include <vector>

// Two-sorted language of the logic of proofs LP and its Boolean-term
// extension LPB. Terms and formulas are immutable trees shared via
// shared_ptr<const ...>; all sugar (->, &, <->, top, 1, the meet ".")
// is expanded at construction, so downstream code only ever sees the
// primitive constructors.
namespace lpwb {

enum class Dialect { LP, LPB };

struct Term;
struct Formula;
using TermPtr = std::shared_ptr<const Term>;
using FormulaPtr = std::shared_ptr<const Formula>;

enum class TermKind { Var, Const, Zero, Neg, Sum, App, Bang };

struct Term {
  TermKind kind;
  std::string name;     // Var, Const
  TermPtr left, right;  // Neg/Bang use left only

  Term(TermKind k, std::string n, TermPtr l, TermPtr r)
      : kind(k), name(std::move(n)), left(std::move(l)), right(std::move(r)) {}
};

enum class FormulaKind { Prop, Bottom, Not, Or, Just, Eq };

struct Formula {
  FormulaKind kind;
  std::string name;      // Prop
  FormulaPtr sub, sub2;  // Not uses sub; Or uses both
  TermPtr term, term2;   // Just uses term+sub; Eq uses term+term2

  Formula(FormulaKind k, std::string n, FormulaPtr a, FormulaPtr b, TermPtr s, TermPtr t)
      : kind(k), name(std::move(n)), sub(std::move(a)), sub2(std::move(b)),
        term(std::move(s)), term2(std::move(t)) {}
};

// Constructors. mk_one/mk_meet/mk_imp/mk_and/mk_iff/mk_top expand sugar.
TermPtr mk_var(std::string name);
TermPtr mk_const(std::string name);
TermPtr mk_zero();
TermPtr mk_neg(TermPtr t);
TermPtr mk_sum(TermPtr s, TermPtr t);
TermPtr mk_app(TermPtr s, TermPtr t);
TermPtr mk_bang(TermPtr t);
TermPtr mk_one();                      // -(0)
TermPtr mk_meet(TermPtr s, TermPtr t); // -((-s) + (-t))

FormulaPtr mk_prop(std::string name);
FormulaPtr mk_bottom();
FormulaPtr mk_not(FormulaPtr a);
FormulaPtr mk_or(FormulaPtr a, FormulaPtr b);
FormulaPtr mk_just(TermPtr t, FormulaPtr a);
FormulaPtr mk_eq(TermPtr s, TermPtr t);
FormulaPtr mk_top();                       // ~bot
FormulaPtr mk_imp(FormulaPtr a, FormulaPtr b); // ~a | b
FormulaPtr mk_and(FormulaPtr a, FormulaPtr b); // ~(~a | ~b)
FormulaPtr mk_iff(FormulaPtr a, FormulaPtr b); // (a->b) & (b->a)

// Structural total order (constructor tag, then name, then children).
int compare(const Term& a, const Term& b);
int compare(const Formula& a, const Formula& b);
bool equal(const TermPtr& a, const TermPtr& b);
bool equal(const FormulaPtr& a, const FormulaPtr& b);

struct TermLess {
  bool operator()(const TermPtr& a, const TermPtr& b) const { return compare(*a, *b) < 0; }
};
struct FormulaLess {
  bool operator()(const FormulaPtr& a, const FormulaPtr& b) const { return compare(*a, *b) < 0; }
};
using TermSet = std::set<TermPtr, TermLess>;
using FormulaSet = std::set<FormulaPtr, FormulaLess>;

// Variable names start with x, y or z; anything else is a constant.
bool is_variable_name(const std::string& name);
bool is_identifier(const std::string& name);

// Dialect admissibility: LP forbids Zero/Neg in terms and Eq in formulas.
bool term_in_dialect(const TermPtr& t, Dialect d);
bool formula_in_dialect(const FormulaPtr& f, Dialect d);

std::size_t term_size(const TermPtr& t);
std::size_t formula_size(const FormulaPtr& f);

// Decomposition of the definitional sugar (a -> b) == ~a | b and a <-> b.
bool match_imp(const FormulaPtr& f, FormulaPtr& lhs, FormulaPtr& rhs);
bool match_iff(const FormulaPtr& f, FormulaPtr& lhs, FormulaPtr& rhs);

// Enumeration helpers. All results use the structural order above.
TermSet subterms(const TermPtr& t);            // includes t itself
FormulaSet subformulas(const FormulaPtr& f);   // includes f itself
TermSet terms_of(const FormulaPtr& f);         // terms of Just/Eq nodes, subterm-closed
std::set<std::string> props_of(const FormulaPtr& f);
std::set<std::string> vars_of(const TermPtr& t);
std::set<std::string> consts_of(const TermPtr& t);

struct ParseError : std::runtime_error {
  std::size_t position; // byte offset into the input
  ParseError(std::string msg, std::size_t pos);
};

TermPtr parse_term(const std::string& text, Dialect dialect);
FormulaPtr parse_formula(const std::string& text, Dialect dialect);

// Minimal-parenthesis rendering; parse(print(n)) is structurally equal to n.
std::string print(const TermPtr& t);
std::string print(const FormulaPtr& f);

// Subformula closure of the seeds, extended `depth` times by t:phi wrappers
// for subterms t occurring in the seeds.
FormulaSet closure_universe(const std::vector<FormulaPtr>& seeds, std::size_t depth);

} // namespace lpwb
