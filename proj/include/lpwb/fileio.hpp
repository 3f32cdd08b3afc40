#pragma once

#include <optional>
#include <string>
#include <vector>

#include "lpwb/errors.hpp"
#include "lpwb/evidence.hpp"
#include "lpwb/finitealg.hpp"
#include "lpwb/internalize.hpp"
#include "lpwb/lpbalg.hpp"
#include "lpwb/proofs.hpp"

// Line-oriented text formats ('#' starts a comment):
//
// Proof file:   "system: lp|hlp|lpb", optional "hyp: <formula>" lines, then
//               numbered steps "N. <formula> ; axiom ID | cs | hyp K |
//               mp I J | jreg I <term> | int I" (I = premise, J = implication).
// CS file:      "total" and/or "c : <formula>" lines; entries validated as
//               axiom instances of the given system.
// Seed file:    "<term> :: <formula>" lines.
// Window file:  one formula per line.
// Algebra file: "kind: full-lp|hlp|regular|binary|full-lpb|poly-lpb" plus
//               sectioned carriers, universes, box/op tables, cs, and for
//               the LPB kinds the term carrier, app/bang tables, interp
//               and theorem oracle. Element values are hex.
namespace lpwb {

std::string read_file(const std::string& path);
void write_file(const std::string& path, const std::string& text);

struct ProofFile {
  System system = System::LP;
  std::vector<FormulaPtr> hypotheses;
  Proof proof;
};

ProofFile parse_proof_file(const std::string& text);
std::string format_proof_file(System sys, const std::vector<FormulaPtr>& hypotheses,
                              const Proof& proof);

ConstantSpec parse_cs_file(const std::string& text, System sys);
std::string format_cs_file(const ConstantSpec& cs);

std::vector<std::pair<TermPtr, FormulaPtr>> parse_seed_file(const std::string& text, Dialect d);
FormulaSet parse_window_file(const std::string& text, Dialect d);

struct AlgebraFile {
  enum class Kind { FullLp, Hlp, Regular, Binary, FullLpb, PolyLpb };
  Kind kind = Kind::FullLp;

  std::optional<BoolAlg> alg; // full-lp / hlp / regular / binary formula side
  BoxTable box;               // full-lp / binary
  OpTables ops;               // hlp / regular
  ConstantSpec cs;
  BinaryModel model;          // binary
  std::optional<LpbAlgebra> lpb;
  std::optional<PolyLpbAlgebra> poly;
  FormulaSet oracle;          // theorem oracle for the LPB kinds
};

AlgebraFile parse_algebra_file(const std::string& text);

std::string format_full_lp_file(const BoolAlg& a, const BoxTable& box, const ConstantSpec& cs);
std::string format_full_lpb_file(const LpbAlgebra& alg, const ConstantSpec& cs,
                                 const FormulaSet& oracle);
std::string format_poly_lpb_file(const PolyLpbAlgebra& alg, const ConstantSpec& cs,
                                 const FormulaSet& oracle);

IsoWitness parse_witness_file(const std::string& text);
std::string format_witness_file(const IsoWitness& w);

} // namespace lpwb
