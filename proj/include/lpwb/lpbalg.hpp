#pragma once

#include <functional>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "lpwb/finitealg.hpp"
#include "lpwb/internalize.hpp"
#include "lpwb/proofs.hpp"
#include "lpwb/report.hpp"

// LPB semantics: finite term structures with application and bang tables,
// t^v_I and theta~_v evaluation, full and polynomial LPB algebra
// verification, bi-Stone representation, and the proof algebra built from
// Hilbert derivations.
namespace lpwb {

struct TermStructure {
  BoolAlg carrier;                     // T
  std::vector<std::vector<Elem>> app;  // T x T -> T
  std::vector<Elem> bang;              // T -> T
  std::map<std::string, Elem> interp;  // constants; the 0-symbol is carrier.zero()

  Elem interp_of(const std::string& c) const; // strict
  void validate() const;                      // table arities and ranges
};

// Assigns unused atoms to constants missing from I; powerset carriers only.
void mint_missing_constants(TermStructure& ts, const std::set<std::string>& constants);

// t^v_I: variables via v, constants via I, homomorphic elsewhere.
Elem eval_term(const TermPtr& t, const std::map<std::string, Elem>& v, const TermStructure& ts);

struct LpbAlgebra {
  BoolAlg formula_alg; // A
  TermStructure ts;
  FormulaSet formula_universe;
  std::map<std::pair<Elem, FormulaPtr>, Elem,
           bool (*)(const std::pair<Elem, FormulaPtr>&, const std::pair<Elem, FormulaPtr>&)>
      box;

  LpbAlgebra();
  Elem box_get(Elem alpha, const FormulaPtr& f) const; // absent entries are 0
  void box_set(Elem alpha, const FormulaPtr& f, Elem v);
};

// theta~_v of Def-style clauses; ':' bodies must lie in the universe.
Elem eval_formula(const FormulaPtr& f, const std::map<std::string, Elem>& theta,
                  const std::map<std::string, Elem>& v, const LpbAlgebra& alg);

struct SweepBudget {
  std::size_t assignments = 1u << 16; // cap on the full assignment space
};

Report verify_full_lpb(const LpbAlgebra& alg, const ConstantSpec& cs,
                       const FormulaSet& theorem_oracle, SweepBudget budget = {});

// ---------------------------------------------------------------- polynomials

// Boolean polynomial over T in canonical form: sorted minimal variable
// support plus the table of corner values (images of 0/1 assignments),
// which determines the polynomial function on all of T.
struct Polynomial {
  std::vector<std::string> vars;
  std::vector<Elem> corners; // size 1 << vars.size(); bit i = value of vars[i]

  bool is_constant() const { return vars.empty(); }
  Elem constant() const { return corners[0]; }
  bool operator==(const Polynomial& other) const = default;
};

Polynomial poly_const(Elem a);
Polynomial poly_var(const std::string& x, const BoolAlg& t);
Polynomial poly_neg(const BoolAlg& t, const Polynomial& f);
Polynomial poly_join(const BoolAlg& t, const Polynomial& f, const Polynomial& g);
Elem poly_eval(const BoolAlg& t, const Polynomial& f, const std::map<std::string, Elem>& v);

// Printed normal form (term syntax over variables and element constants
// e<k>); unique per polynomial, reparseable by the algebra file loader.
std::string poly_print(const Polynomial& f, const BoolAlg& t);

// Extensions of app/bang from T to T[Var].
struct PolyExt {
  std::function<Polynomial(const Polynomial&, const Polynomial&)> app;
  std::function<Polynomial(const Polynomial&)> bang;
};

// The shipped default: apply the T tables on constants, first/only
// argument otherwise.
PolyExt extend_ops(const TermStructure& ts);

// A supplied extension must agree with the T tables on constants.
void validate_extension(const TermStructure& ts, const PolyExt& ext);

// I~ : Term -> T[Var].
Polynomial interp_poly(const TermPtr& t, const TermStructure& ts, const PolyExt& ext);

// Extensional equality by the |T|^k assignment sweep.
bool poly_equal(const Polynomial& f, const Polynomial& g, const BoolAlg& t,
                std::size_t budget = 1u << 20);

struct PolyLpbAlgebra {
  BoolAlg formula_alg;
  TermStructure ts;
  FormulaSet formula_universe;
  TermSet term_universe; // syntactic terms whose I~ images key the box
  std::map<std::string, Polynomial> polys; // canonical key -> declared polynomial
  std::map<std::pair<std::string, FormulaPtr>, Elem,
           bool (*)(const std::pair<std::string, FormulaPtr>&,
                    const std::pair<std::string, FormulaPtr>&)>
      box;
  std::vector<std::string> keying_violations; // declarations colliding on a canonical key

  PolyLpbAlgebra();
  Elem box_get(const Polynomial& p, const FormulaPtr& f) const;
  // Returns false (and records a keying violation) if the canonical key is
  // already bound to a different value.
  bool box_declare(const Polynomial& p, const FormulaPtr& f, Elem v);
};

Report verify_poly_lpb(const PolyLpbAlgebra& alg, const PolyExt& ext, const ConstantSpec& cs,
                       const FormulaSet& theorem_oracle, SweepBudget budget = {});

// ------------------------------------------------------------------ bi-Stone

struct BiStoneResult {
  LpbAlgebra image;
  IsoWitness f; // formula side
  IsoWitness g; // term side
};
BiStoneResult bi_stone(const LpbAlgebra& alg);

// The four bi-isomorphism conditions, exhaustively over declared data.
Report verify_bi_isomorphism(const LpbAlgebra& a, const LpbAlgebra& b, const IsoWitness& f,
                             const IsoWitness& g);

Polynomial poly_map(const IsoWitness& g, const Polynomial& p);

struct BiStonePolyResult {
  PolyLpbAlgebra image;
  IsoWitness f;
  IsoWitness g;
};
BiStonePolyResult bi_stone_poly(const PolyLpbAlgebra& alg);

Report verify_bi_isomorphism_poly(const PolyLpbAlgebra& a, const PolyLpbAlgebra& b,
                                  const IsoWitness& f, const IsoWitness& g,
                                  const PolyExt& ext_a, const PolyExt& ext_b);

// ------------------------------------------------------------- proof algebra

// Canonical classical form of a formula: maximal non-Boolean subformulas
// as opaque atoms (minimal support) plus the truth table over them.
struct PropCanon {
  std::vector<FormulaPtr> atoms;
  std::vector<bool> table; // size 1 << atoms.size()
  std::string key() const;
};

PropCanon prop_canon(const FormulaPtr& f, std::size_t atom_cap = 20);
bool classically_valid(const FormulaPtr& f);
bool classically_equal(const FormulaPtr& a, const FormulaPtr& b);
bool classically_implies(const FormulaPtr& a, const FormulaPtr& b);

// The Boolean algebra of single-conclusion Hilbert proofs: elements are
// classes of proved formulas up to classical equivalence; Boolean
// operations act on representatives; app follows the implication case
// split and bang lifts the recorded derivation.
class PrAlgebra {
public:
  using Id = std::size_t;

  struct Provenance {
    std::vector<FormulaPtr> hypotheses;
    Proof proof;
  };

  PrAlgebra(System sys, ConstantSpec cs);

  Id intern(const FormulaPtr& representative);
  Id intern_entry(const FormulaPtr& representative, std::optional<Provenance> prov);

  Id zero();
  Id one();
  Id neg(Id a);
  Id join(Id a, Id b);
  Id meet(Id a, Id b);
  Id app(Id a, Id b);
  Id bang(Id a); // throws InputError without a recorded proof

  bool leq(Id a, Id b) const;
  const FormulaPtr& rep(Id a) const { return entries_.at(a).rep; }
  const std::optional<Provenance>& provenance(Id a) const { return entries_.at(a).prov; }
  std::size_t size() const { return entries_.size(); }

private:
  struct Entry {
    FormulaPtr rep;
    std::optional<Provenance> prov;
  };
  System sys_;
  ConstantSpec cs_;
  std::vector<Entry> entries_;
  std::map<std::string, Id> index_; // canonical key -> id
};

PrAlgebra build_pr_algebra(const std::vector<std::pair<FormulaPtr, std::optional<PrAlgebra::Provenance>>>& entries,
                           System sys, const ConstantSpec& cs);

} // namespace lpwb
