#pragma once

#include <map>
#include <string>
#include <vector>

#include "lpwb/errors.hpp"
#include "lpwb/proofs.hpp"

// Compiles checked derivations into proof terms. Axiom steps become
// constants, CS steps compile through j4, modus ponens becomes
// application, hypotheses become proof variables, Int becomes !1. The
// emitted derivation uses term-level modus ponens, so Example-2.3-style
// proofs come out step for step.
namespace lpwb {

struct LiftBinding {
  std::map<std::size_t, std::string> vars; // hypothesis index -> proof variable

  void validate(std::size_t hypothesis_count) const; // injective, covering, lexically valid
};

// Deterministic choice of constants for axiom instances. Lookup in the
// finite entries first (smallest constant name), otherwise a name derived
// from a stable hash of the printed instance; minted pairs are recorded.
class ConstantOracle {
public:
  ConstantOracle(ConstantSpec cs, bool strict);

  std::string choose(const FormulaPtr& axiom_instance, System sys);

  // The input CS extended by every pair this oracle handed out.
  const ConstantSpec& recorded() const { return cs_; }

private:
  ConstantSpec cs_;
  bool strict_;
};

struct Internalized {
  TermPtr term;
  Proof proof;
  std::vector<FormulaPtr> hypotheses; // x_i : psi_i for lifted derivations
};

// Requires check_proof(proof, sys, cs, {}) to pass. Returns t and a
// derivation of t:phi that re-checks under oracle.recorded().
Internalized internalize(const Proof& proof, System sys, const ConstantSpec& cs,
                         ConstantOracle& oracle);

// Lifting: psi_1..psi_n |- phi becomes x_1:psi_1,..,x_n:psi_n |- t(x):phi.
Internalized lift(const Proof& proof, System sys, const ConstantSpec& cs,
                  const std::vector<FormulaPtr>& hypotheses, const LiftBinding& binding,
                  ConstantOracle& oracle);

// LPB only: extends a checked theorem witness by one Int step, 1:phi.
Proof universal_internalize(const FormulaPtr& phi, const Proof& witness, const ConstantSpec& cs);

} // namespace lpwb
