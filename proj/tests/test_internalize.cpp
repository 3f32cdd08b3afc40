#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "gen.hpp"
#include "lpwb/fileio.hpp"
#include "lpwb/internalize.hpp"

using namespace lpwb;

namespace {

FormulaPtr lp(const std::string& s) { return parse_formula(s, Dialect::LP); }

// A five-step derivation of phi -> phi for an arbitrary phi,
// built from PL4, PL3 and PL1.
Proof identity_proof(const FormulaPtr& phi) {
  FormulaPtr orr = mk_or(phi, phi);
  Proof p;
  p.steps.push_back({mk_imp(mk_imp(orr, phi), mk_imp(mk_imp(phi, orr), mk_imp(phi, phi))),
                     Justification::axiom("PL4")});
  p.steps.push_back({mk_imp(orr, phi), Justification::axiom("PL3")});
  p.steps.push_back({mk_imp(phi, orr), Justification::axiom("PL1")});
  p.steps.push_back({mk_imp(mk_imp(phi, orr), mk_imp(phi, phi)), Justification::mp(1, 0)});
  p.steps.push_back({mk_imp(phi, phi), Justification::mp(2, 3)});
  return p;
}

std::size_t count_kind(const TermPtr& t, TermKind k) {
  std::size_t n = t->kind == k ? 1 : 0;
  if (t->left) n += count_kind(t->left, k);
  if (t->right) n += count_kind(t->right, k);
  return n;
}

// Axiom/CS leaves and MP nodes of the derivation tree unfolded from the
// final step (the independent count the emitted term must reflect).
void tree_counts(const Proof& p, std::size_t k, std::size_t& leaves, std::size_t& mps) {
  const auto& j = p.steps[k].just;
  switch (j.kind) {
    case Justification::Kind::Axiom:
    case Justification::Kind::CSMember: ++leaves; return;
    case Justification::Kind::MP:
      ++mps;
      tree_counts(p, j.premise, leaves, mps);
      tree_counts(p, j.impl, leaves, mps);
      return;
    default: return;
  }
}

} // namespace

TEST_CASE("internalize reproduces (a*b)*c and the justified identity derivation") {
  ConstantSpec cs = parse_cs_file(
      "a : ((p|p) -> p) -> ((p -> p|p) -> (p -> p))\n"
      "b : (p|p) -> p\n"
      "c : p -> p|p\n",
      System::LP);
  Proof p = identity_proof(mk_prop("p"));
  REQUIRE(check_proof(p, System::LP, cs, {}).ok);

  ConstantOracle oracle(cs, /*strict=*/true);
  Internalized out = internalize(p, System::LP, cs, oracle);

  CHECK(equal(out.term, parse_term("(a*b)*c", Dialect::LP)));
  CHECK(out.proof.steps.size() == 5);
  CHECK(equal(out.proof.steps.back().formula, lp("(a*b)*c:(p -> p)")));
  CheckReport r = check_proof(out.proof, System::LP, oracle.recorded(), {});
  CHECK(r.ok);
}

TEST_CASE("single axiom step compiles to one cs step") {
  Proof p;
  p.steps.push_back({lp("p -> p | q"), Justification::axiom("PL1")});
  ConstantSpec total;
  total.total = true;
  ConstantOracle oracle(total, false);
  Internalized out = internalize(p, System::LP, total, oracle);
  CHECK(out.proof.steps.size() == 1);
  CHECK(out.term->kind == TermKind::Const);
  CHECK(equal(out.proof.steps[0].formula, mk_just(out.term, p.steps[0].formula)));
  CHECK(check_proof(out.proof, System::LP, oracle.recorded(), {}).ok);

  // Total-mode names are a stable function of the instance.
  ConstantOracle again(total, false);
  CHECK(print(internalize(p, System::LP, total, again).term) == print(out.term));
}

TEST_CASE("cs steps compile through j4 to !c") {
  ConstantSpec cs = parse_cs_file("c : p -> p | q\n", System::LP);
  Proof p;
  p.steps.push_back({lp("c:(p -> p | q)"), Justification::cs()});
  ConstantOracle oracle(cs, true);
  Internalized out = internalize(p, System::LP, cs, oracle);
  CHECK(print(out.term) == "!c");
  CHECK(out.proof.steps.size() == 3);
  CHECK(equal(out.proof.steps.back().formula, lp("!c:c:(p -> p | q)")));
  CHECK(check_proof(out.proof, System::LP, oracle.recorded(), {}).ok);
}

TEST_CASE("Int steps compile to !1") {
  Proof p;
  p.steps.push_back({parse_formula("x = x", Dialect::LPB), Justification::axiom("Eq1")});
  p.steps.push_back({parse_formula("1:(x = x)", Dialect::LPB), Justification::intro(0)});
  ConstantSpec empty;
  ConstantOracle oracle(empty, false);
  Internalized out = internalize(p, System::LPB, empty, oracle);
  CHECK(equal(out.term, mk_bang(mk_one())));
  CHECK(equal(out.proof.steps.back().formula, parse_formula("!1:1:(x = x)", Dialect::LPB)));
  CHECK(check_proof(out.proof, System::LPB, oracle.recorded(), {}).ok);
}

TEST_CASE("lift compiles hypotheses to variables") {
  Proof p;
  p.steps.push_back({lp("p"), Justification::hypothesis(0)});
  p.steps.push_back({lp("p -> q"), Justification::hypothesis(1)});
  p.steps.push_back({lp("q"), Justification::mp(0, 1)});
  std::vector<FormulaPtr> hyps = {lp("p"), lp("p -> q")};
  LiftBinding binding;
  binding.vars[0] = "x";
  binding.vars[1] = "y";
  ConstantSpec total;
  total.total = true;
  ConstantOracle oracle(total, false);
  Internalized out = lift(p, System::LP, total, hyps, binding, oracle);

  CHECK(print(out.term) == "y*x");
  REQUIRE(out.hypotheses.size() == 2);
  CHECK(equal(out.hypotheses[0], lp("x:p")));
  CHECK(equal(out.hypotheses[1], lp("y:(p -> q)")));
  CHECK(equal(out.proof.steps.back().formula, lp("(y*x):q")));
  CHECK(check_proof(out.proof, System::LP, oracle.recorded(), out.hypotheses).ok);
}

TEST_CASE("lift of a bare hypothesis is x:psi") {
  Proof p;
  p.steps.push_back({lp("p"), Justification::hypothesis(0)});
  LiftBinding binding;
  binding.vars[0] = "x";
  ConstantSpec empty;
  ConstantOracle oracle(empty, true);
  Internalized out = lift(p, System::LP, empty, {lp("p")}, binding, oracle);
  CHECK(print(out.term) == "x");
  CHECK(out.proof.steps.size() == 1);
  CHECK(equal(out.proof.steps[0].formula, lp("x:p")));
}

TEST_CASE("lift with no hypotheses is internalize") {
  Proof p = identity_proof(mk_prop("q"));
  ConstantSpec total;
  total.total = true;
  ConstantOracle o1(total, false), o2(total, false);
  Internalized a = internalize(p, System::LP, total, o1);
  Internalized b = lift(p, System::LP, total, {}, {}, o2);
  CHECK(print(a.term) == print(b.term));
  CHECK(a.proof.steps.size() == b.proof.steps.size());
}

TEST_CASE("universal_internalize appends one Int step") {
  Proof p = identity_proof(mk_prop("p"));
  Proof out = universal_internalize(lp("p -> p"), p, {});
  CHECK(out.steps.size() == 6);
  CHECK(equal(out.steps.back().formula, parse_formula("1:(p -> p)", Dialect::LPB)));
  CHECK(check_proof(out, System::LPB, {}, {}).ok);

  Proof jt;
  jt.steps.push_back({lp("x:p -> p"), Justification::axiom("jT")});
  Proof out2 = universal_internalize(lp("x:p -> p"), jt, {});
  CHECK(out2.steps.size() == 2);
  CHECK(check_proof(out2, System::LPB, {}, {}).ok);

  Proof bad;
  bad.steps.push_back({lp("p"), Justification::axiom("PL1")});
  CHECK_THROWS_AS(universal_internalize(lp("p"), bad, {}), InputError);
}

TEST_CASE("certification and structural reflection on identity proofs") {
  testgen::Gen gen(1234);
  ConstantSpec total;
  total.total = true;
  for (int i = 0; i < 50; ++i) {
    FormulaPtr phi = gen.formula(1 + gen.pick(5), Dialect::LP);
    Proof p = identity_proof(phi);
    REQUIRE(check_proof(p, System::LP, total, {}).ok);
    ConstantOracle oracle(total, false);
    Internalized out = internalize(p, System::LP, total, oracle);
    CHECK(equal(out.proof.steps.back().formula, mk_just(out.term, mk_imp(phi, phi))));
    CHECK(check_proof(out.proof, System::LP, oracle.recorded(), {}).ok);

    std::size_t leaves = 0, mps = 0;
    tree_counts(p, p.steps.size() - 1, leaves, mps);
    CHECK(count_kind(out.term, TermKind::Const) == leaves);
    CHECK(count_kind(out.term, TermKind::App) == mps);
  }
}

TEST_CASE("unused steps contribute nothing to the term") {
  FormulaPtr x = lp("p -> p | p");
  Proof p;
  p.steps.push_back({x, Justification::axiom("PL1")});
  p.steps.push_back({lp("q -> q | r"), Justification::axiom("PL1")}); // never referenced
  p.steps.push_back({mk_imp(x, mk_or(x, x)), Justification::axiom("PL1")});
  p.steps.push_back({mk_or(x, x), Justification::mp(0, 2)});
  ConstantSpec total;
  total.total = true;
  ConstantOracle oracle(total, false);
  Internalized out = internalize(p, System::LP, total, oracle);
  CHECK(out.proof.steps.size() == 3);
  CHECK(count_kind(out.term, TermKind::Const) == 2);
  CHECK(count_kind(out.term, TermKind::App) == 1);
}

TEST_CASE("strict finite mode fails without a covering entry") {
  ConstantSpec cs; // empty, not total
  Proof p;
  p.steps.push_back({lp("p -> p | q"), Justification::axiom("PL1")});
  ConstantOracle strict(cs, true);
  CHECK_THROWS_AS(internalize(p, System::LP, cs, strict), InputError);
  ConstantOracle minting(cs, false);
  Internalized out = internalize(p, System::LP, cs, minting);
  CHECK(check_proof(out.proof, System::LP, minting.recorded(), {}).ok);
  CHECK(minting.recorded().entry_count() == 1);
}

TEST_CASE("internalize rejects jreg steps and unchecked proofs") {
  Proof p;
  p.steps.push_back({lp("p <-> q"), Justification::hypothesis(0)});
  p.steps.push_back({lp("x:p <-> x:q"), Justification::jreg(0, parse_term("x", Dialect::LP))});
  ConstantSpec empty;
  ConstantOracle oracle(empty, false);
  CHECK_THROWS_AS(internalize(p, System::HLP, empty, oracle), InputError);

  Proof broken;
  broken.steps.push_back({lp("p | q"), Justification::axiom("PL1")});
  CHECK_THROWS_AS(internalize(broken, System::LP, empty, oracle), InputError);
}
