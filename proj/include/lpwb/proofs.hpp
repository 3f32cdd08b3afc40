#pragma once

#include <cstddef>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "lpwb/syntax.hpp"

// Hilbert systems: LP_CS (axioms PL1-PL5, Appl, Sum, jT, j4 and rule MP),
// HLP (adds the rule JReg) and LPB_CS (adds B1-B5, Eq1, Eq2 and rule Int),
// each parameterized by a constant specification.
namespace lpwb {

enum class System { LP, HLP, LPB };

Dialect system_dialect(System sys);
std::string system_name(System sys);
std::optional<System> system_from_name(const std::string& name);

struct ConstantSpec {
  // Constant name -> axiom instances it certifies. Sorted for determinism.
  std::map<std::string, FormulaSet> entries;
  // Total mode: any constant paired with any axiom instance is a member.
  bool total = false;

  bool has_entry(const std::string& c, const FormulaPtr& f) const;
  void add(const std::string& c, FormulaPtr f);
  std::size_t entry_count() const;
};

struct AxiomMatch {
  std::string scheme;
  // Metavariable assignment, printed (phi/psi/chi and s/t/u).
  std::vector<std::pair<std::string, std::string>> substitution;
};

// Tries the schemes in declaration order (PL1..j4, then for LPB the
// B/Eq schemes, join column before meet column) against the desugared AST.
std::optional<AxiomMatch> match_axiom(const FormulaPtr& f, System sys);

// Validates f against one named scheme only.
std::optional<AxiomMatch> match_scheme(const std::string& scheme, const FormulaPtr& f, System sys);

bool is_known_scheme(const std::string& scheme, System sys);

bool cs_member(const std::string& c, const FormulaPtr& f, const ConstantSpec& cs, System sys);

struct Justification {
  enum class Kind { Axiom, CSMember, Hypothesis, MP, JReg, Int };
  Kind kind;
  std::string scheme;      // Axiom
  std::size_t hyp = 0;     // Hypothesis (0-based)
  std::size_t premise = 0; // MP/JReg/Int: step giving the premise
  std::size_t impl = 0;    // MP: step giving the implication
  TermPtr term;            // JReg

  static Justification axiom(std::string scheme);
  static Justification cs();
  static Justification hypothesis(std::size_t k);
  static Justification mp(std::size_t premise, std::size_t impl);
  static Justification jreg(std::size_t premise, TermPtr t);
  static Justification intro(std::size_t premise); // rule Int
};

struct ProofStep {
  FormulaPtr formula;
  Justification just;
};

struct Proof {
  std::vector<ProofStep> steps;
};

struct CheckReport {
  bool ok = false;
  std::optional<std::pair<std::size_t, std::string>> first_failure; // step index, reason
  std::vector<std::string> per_step; // resolved rule/scheme/substitution per step
  std::vector<std::string> warnings;
};

// Step k passes iff its justification validates against the preceding
// steps. MP(i,j) accepts the plain form (step j == step i -> step k) and
// the term-level form (step i == t:phi, step j == s:(phi->psi),
// step k == (s*t):psi) used by internalized derivations.
CheckReport check_proof(const Proof& proof, System sys, const ConstantSpec& cs,
                        const std::vector<FormulaPtr>& hypotheses);

} // namespace lpwb
