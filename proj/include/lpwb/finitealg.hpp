#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "lpwb/errors.hpp"
#include "lpwb/evidence.hpp"
#include "lpwb/proofs.hpp"
#include "lpwb/report.hpp"

// Finite Boolean algebras (powerset masks or explicit op tables), bounded
// verification of the full-LP / HLP / regular algebra conditions, Stone
// representation via the atoms-below map, and transport of Box tables
// along isomorphisms.
namespace lpwb {

using Elem = std::uint64_t;

// Elements are ids 0..size-1; for a powerset algebra the id is the
// bitmask over atoms.
class BoolAlg {
public:
  static BoolAlg powerset(unsigned atoms);
  // Tables are validated: throws InputError naming the first broken law.
  static BoolAlg from_tables(std::size_t size, Elem zero, std::vector<Elem> neg,
                             std::vector<std::vector<Elem>> join);

  std::size_t size() const { return size_; }
  bool is_powerset() const { return powerset_; }
  unsigned atoms() const { return atoms_; }

  Elem zero() const { return zero_; }
  Elem one() const { return one_; }
  Elem neg(Elem a) const;
  Elem join(Elem a, Elem b) const;
  Elem meet(Elem a, Elem b) const { return neg(join(neg(a), neg(b))); }
  Elem imp(Elem a, Elem b) const { return join(neg(a), b); }
  bool leq(Elem a, Elem b) const { return join(a, b) == b; }

  std::string show(Elem a) const; // lowercase hex

  BoolAlg() = default; // the one-element algebra (powerset of no atoms)

private:
  bool powerset_ = true;
  unsigned atoms_ = 0;
  std::size_t size_ = 1;
  Elem zero_ = 0, one_ = 0;
  std::vector<Elem> neg_;
  std::vector<std::vector<Elem>> join_;
};

// First violated Boolean law over the given tables, if any.
std::optional<std::string> boolean_law_violation(std::size_t size, Elem zero,
                                                 const std::vector<Elem>& neg,
                                                 const std::vector<std::vector<Elem>>& join);

struct IsoWitness {
  std::vector<Elem> forward; // input element id -> output element id

  Elem operator()(Elem a) const { return forward.at(a); }
  IsoWitness inverse() const;
};

struct StoneResult {
  BoolAlg algebra; // powerset over the input's atoms
  IsoWitness witness;
};

// Atoms-below map; the witness is verified to preserve 0, neg and join.
StoneResult stone(const BoolAlg& a);

struct BoxTable {
  TermSet term_universe;        // closed under subterms
  FormulaSet formula_universe;  // closed under subformulas
  std::map<std::pair<TermPtr, FormulaPtr>, Elem,
           bool (*)(const std::pair<TermPtr, FormulaPtr>&, const std::pair<TermPtr, FormulaPtr>&)>
      entries;

  BoxTable();
  Elem get(const TermPtr& t, const FormulaPtr& f) const; // absent entries are 0
  void set(const TermPtr& t, const FormulaPtr& f, Elem v);
};

// Throws InputError if a universe is not closed.
void validate_universes(const BoxTable& box);

// Al-Appl/Al-Sum/Al-j4 on composites declared in the term universe,
// Al-CS on entries within the universes, Al-jT against every valuation
// of the universe's propositional atoms (|A|^k, budgeted; a truncation
// is reported, never silent).
Report verify_full_lp(const BoolAlg& a, const BoxTable& box, const ConstantSpec& cs,
                      std::size_t valuation_budget = 1u << 16);

// HLP algebras carry operators A -> A per term. Regular mode checks only
// A-Appl and A-Sum.
using OpTables = std::map<TermPtr, std::vector<Elem>, TermLess>;
Report verify_hlp(const BoolAlg& a, const OpTables& ops, bool regular_only);

// box'(t, phi) := f(box(t, phi)).
BoxTable transport(const BoxTable& box, const IsoWitness& witness);

// Evidence-minimal model exported as a table over the 1-atom powerset.
BoxTable box_from_binary(const BinaryModel& model, const FormulaSet& formula_universe,
                         const TermSet& term_universe);

} // namespace lpwb
