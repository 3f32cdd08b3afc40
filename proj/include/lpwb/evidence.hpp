#pragma once

#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "lpwb/errors.hpp"
#include "lpwb/proofs.hpp"
#include "lpwb/report.hpp"

// Minimal-evidence semantics over the two-element Boolean algebra: the
// least evidence function generated by a constant specification and seed
// pairs, formula evaluation, countermodel search, and the bounded checks
// that a model is a legal binary algebra / Mkrtychev model.
namespace lpwb {

// A seeded model made the evidence function violate jT.
struct ModelError : std::runtime_error {
  explicit ModelError(const std::string& msg) : std::runtime_error(msg) {}
};

struct BinaryModel {
  ConstantSpec cs;
  std::vector<std::pair<TermPtr, FormulaPtr>> seeds;
  std::map<std::string, int> valuation; // props default to 0
  FormulaSet window;                    // finite window, required in total mode

  int value_of(const std::string& prop) const {
    auto it = valuation.find(prop);
    return it == valuation.end() ? 0 : it->second;
  }
};

// The set J(t) of formulas with evidence value 1, by structural recursion
// on t. LP dialect only; total-mode constants draw on the window.
FormulaSet justified_set(const TermPtr& t, const BinaryModel& model);

// Mkrtychev evaluation; asserts jT on the subformula universe of f first
// and throws ModelError if a seed made the model illegal.
int eval(const FormulaPtr& f, const BinaryModel& model);

// Enumerates all valuations of f's atoms (lexicographically, all-zero
// first) and returns the first legal model falsifying f, if any. A
// returned model certifies non-theoremhood; nullopt proves nothing.
std::optional<BinaryModel> refute(const FormulaPtr& f, const ConstantSpec& cs,
                                  const std::vector<std::pair<TermPtr, FormulaPtr>>& seeds,
                                  const FormulaSet& window = {});

// Checks Al-Appl, Al-Sum, Al-j4, Al-CS and Al-jT instances over the
// declared finite universes.
Report verify_binary_algebra(const BinaryModel& model, const FormulaSet& formula_universe,
                             const TermSet& term_universe);

// Builds the Mkrtychev presentation (E, V) from the model and re-evaluates
// every universe formula both ways; reports any pointwise mismatch.
Report mkrtychev_roundtrip(const BinaryModel& model, const FormulaSet& universe);

} // namespace lpwb
