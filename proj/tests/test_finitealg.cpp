#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "gen.hpp"
#include "lpwb/fileio.hpp"
#include "lpwb/finitealg.hpp"

using namespace lpwb;

namespace {

FormulaPtr lp(const std::string& s) { return parse_formula(s, Dialect::LP); }
TermPtr pt(const std::string& s) { return parse_term(s, Dialect::LP); }

// The four-element Boolean algebra with scrambled labels:
// 2 = bottom, 1 = top, 0 and 3 the two atoms.
BoolAlg scrambled_four() {
  std::vector<Elem> neg = {3, 2, 1, 0};
  auto join_of = [](Elem a, Elem b) -> Elem {
    auto mask = [](Elem x) -> unsigned { return x == 2 ? 0u : x == 0 ? 1u : x == 3 ? 2u : 3u; };
    auto unmask = [](unsigned m) -> Elem { return m == 0 ? 2 : m == 1 ? 0 : m == 2 ? 3 : 1; };
    return unmask(mask(a) | mask(b));
  };
  std::vector<std::vector<Elem>> join(4, std::vector<Elem>(4));
  for (Elem a = 0; a < 4; ++a)
    for (Elem b = 0; b < 4; ++b) join[a][b] = join_of(a, b);
  return BoolAlg::from_tables(4, 2, std::move(neg), std::move(join));
}

BinaryModel lemma46_model() {
  BinaryModel m;
  m.cs = parse_cs_file("c : p & p -> p\n", System::LP);
  return m;
}

BoxTable minimal_model_table() {
  FormulaSet fu = closure_universe({lp("c:(p & p -> p)"), lp("c:top")}, 1);
  TermSet tu;
  for (const auto& t : {pt("c"), pt("!c"), pt("c*c"), pt("c + c"), pt("x")}) {
    TermSet sub = subterms(t);
    tu.insert(sub.begin(), sub.end());
  }
  return box_from_binary(lemma46_model(), fu, tu);
}

} // namespace

TEST_CASE("powerset algebra arithmetic") {
  BoolAlg a = BoolAlg::powerset(2);
  CHECK(a.size() == 4);
  CHECK(a.one() == 3);
  CHECK(a.neg(1) == 2);
  CHECK(a.join(1, 2) == 3);
  CHECK(a.meet(3, 1) == 1);
  CHECK(a.imp(1, 0) == 2);
  CHECK(a.leq(1, 3));
  CHECK(!a.leq(3, 1));
}

TEST_CASE("law validation finds broken tables") {
  // Sabotage the join table of the two-element algebra.
  std::vector<Elem> neg = {1, 0};
  std::vector<std::vector<Elem>> join = {{0, 1}, {1, 0}}; // 1+1 = 0 breaks idempotence
  auto bad = boolean_law_violation(2, 0, neg, join);
  REQUIRE(bad.has_value());
  CHECK_THROWS_AS(BoolAlg::from_tables(2, 0, neg, join), InputError);

  std::vector<std::vector<Elem>> good = {{0, 1}, {1, 1}};
  CHECK(!boolean_law_violation(2, 0, neg, good).has_value());
}

TEST_CASE("stone: two-element and scrambled four-element algebras") {
  BoolAlg two = BoolAlg::from_tables(2, 0, {1, 0}, {{0, 1}, {1, 1}});
  StoneResult s2 = stone(two);
  CHECK(s2.algebra.atoms() == 1);
  CHECK(s2.witness(0) == 0);
  CHECK(s2.witness(1) == 1);

  BoolAlg four = scrambled_four();
  StoneResult s4 = stone(four);
  CHECK(s4.algebra.atoms() == 2);
  CHECK(s4.witness(2) == 0); // bottom to empty mask
  CHECK(s4.witness(1) == 3); // top to full mask
  CHECK((s4.witness(0) | s4.witness(3)) == 3);
  CHECK((s4.witness(0) & s4.witness(3)) == 0);

  // Witness composed with its inverse is the identity.
  IsoWitness inv = s4.witness.inverse();
  for (Elem x = 0; x < 4; ++x) CHECK(inv(s4.witness(x)) == x);

  // Stone of a powerset algebra is the identity map.
  StoneResult sp = stone(BoolAlg::powerset(3));
  for (Elem x = 0; x < 8; ++x) CHECK(sp.witness(x) == x);
}

TEST_CASE("verify_full_lp accepts the exported minimal model") {
  BoxTable box = minimal_model_table();
  BoolAlg two = BoolAlg::powerset(1);
  ConstantSpec cs = parse_cs_file("c : p & p -> p\n", System::LP);
  Report r = verify_full_lp(two, box, cs);
  CHECK(r.ok());
  CHECK(!r.truncated);
}

TEST_CASE("constructed violations are reported with witnesses") {
  BoolAlg two = BoolAlg::powerset(1);
  ConstantSpec cs = parse_cs_file("c : p & p -> p\n", System::LP);

  BoxTable broken_sum = minimal_model_table();
  broken_sum.set(pt("c + c"), lp("p & p -> p"), 0);
  Report r1 = verify_full_lp(two, broken_sum, cs);
  REQUIRE(!r1.ok());
  CHECK(r1.violations[0].find("Al-Sum") != std::string::npos);

  BoxTable broken_jt = minimal_model_table();
  broken_jt.term_universe.insert(pt("x"));
  broken_jt.formula_universe.insert(mk_bottom());
  broken_jt.set(pt("x"), mk_bottom(), 1);
  Report r2 = verify_full_lp(two, broken_jt, cs);
  REQUIRE(!r2.ok());
  bool jt = false, cs_ok = true;
  for (const auto& v : r2.violations) {
    if (v.find("Al-jT") != std::string::npos) jt = true;
    if (v.find("Al-CS") != std::string::npos) cs_ok = false;
  }
  CHECK(jt);
  CHECK(cs_ok);
}

TEST_CASE("universe closure is required") {
  BoxTable box;
  box.formula_universe.insert(lp("p | q")); // p, q missing
  CHECK_THROWS_AS(validate_universes(box), InputError);
  BoxTable box2;
  box2.term_universe.insert(pt("x*y")); // x, y missing
  CHECK_THROWS_AS(validate_universes(box2), InputError);
}

TEST_CASE("verify_hlp on zero, identity and broken operator tables") {
  BoolAlg two = BoolAlg::powerset(1);
  OpTables zero_ops;
  for (const auto& t : {pt("x"), pt("y"), pt("x*y"), pt("x + y"), pt("!x")})
    zero_ops[t] = std::vector<Elem>(two.size(), 0);
  CHECK(verify_hlp(two, zero_ops, false).ok());
  CHECK(verify_hlp(two, zero_ops, true).ok());

  BoolAlg four = BoolAlg::powerset(2);
  OpTables idops;
  std::vector<Elem> identity = {0, 1, 2, 3};
  for (const auto& t : {pt("x"), pt("y"), pt("x*y"), pt("x + y"), pt("!x")}) idops[t] = identity;
  CHECK(verify_hlp(four, idops, false).ok()); // (a=>b)*a = a*b <= b in any BA

  OpTables broken = idops;
  broken[pt("!x")] = std::vector<Elem>(four.size(), 0);
  Report r = verify_hlp(four, broken, false);
  REQUIRE(!r.ok());
  CHECK(r.violations[0].find("A-j4") != std::string::npos);
  // Regular mode checks only A-Appl and A-Sum.
  CHECK(verify_hlp(four, broken, true).ok());
}

TEST_CASE("transport: identity, stone image, and inverse") {
  BoxTable box = minimal_model_table();
  BoolAlg two = BoolAlg::powerset(1);
  ConstantSpec cs = parse_cs_file("c : p & p -> p\n", System::LP);

  IsoWitness id;
  id.forward = {0, 1};
  BoxTable same = transport(box, id);
  CHECK(same.entries == box.entries);

  StoneResult s = stone(two);
  BoxTable image = transport(box, s.witness);
  CHECK(verify_full_lp(s.algebra, image, cs).ok());
  BoxTable back = transport(image, s.witness.inverse());
  CHECK(back.entries == box.entries);
}

TEST_CASE("transport preserves verifier verdicts across scrambled labels") {
  // A box over the scrambled four-element algebra, verified before and
  // after the stone transport.
  BoolAlg four = scrambled_four();
  StoneResult s = stone(four);
  testgen::Gen gen(606);
  ConstantSpec empty;
  for (int trial = 0; trial < 30; ++trial) {
    BoxTable box;
    box.formula_universe = closure_universe({gen.formula(1 + gen.pick(5), Dialect::LP)}, 0);
    TermSet tu;
    for (int i = 0; i < 3; ++i) {
      TermSet sub = subterms(gen.term(1 + gen.pick(4), Dialect::LP));
      tu.insert(sub.begin(), sub.end());
    }
    box.term_universe = tu;
    for (const auto& t : box.term_universe)
      for (const auto& f : box.formula_universe)
        if (gen.pick(3) == 0) box.set(t, f, gen.pick(4));
    Report before = verify_full_lp(four, box, empty);
    Report after = verify_full_lp(s.algebra, transport(box, s.witness), empty);
    CHECK(before.ok() == after.ok());
    CHECK(before.violations.size() == after.violations.size());
  }
}

TEST_CASE("Al-jT agrees with an independent recomputation (n <= 3 atoms)") {
  testgen::Gen gen(321);
  for (unsigned atoms = 1; atoms <= 3; ++atoms) {
    BoolAlg a = BoolAlg::powerset(atoms);
    for (int trial = 0; trial < 20; ++trial) {
      BoxTable box;
      box.formula_universe = closure_universe({gen.formula(1 + gen.pick(4), Dialect::LP)}, 0);
      TermSet tu = subterms(gen.term(1 + gen.pick(3), Dialect::LP));
      box.term_universe = tu;
      for (const auto& t : box.term_universe)
        for (const auto& f : box.formula_universe)
          if (gen.pick(2) == 0) box.set(t, f, gen.pick(a.size()));

      Report r = verify_full_lp(a, box, {});
      bool jt_found = false;
      for (const auto& v : r.violations)
        if (v.find("Al-jT") != std::string::npos) jt_found = true;

      // Independent oracle: recompute the assignment from scratch.
      std::set<std::string> prop_set;
      for (const auto& f : box.formula_universe) {
        auto ps = props_of(f);
        prop_set.insert(ps.begin(), ps.end());
      }
      std::vector<std::string> props(prop_set.begin(), prop_set.end());
      std::function<Elem(const FormulaPtr&, const std::map<std::string, Elem>&)> ev =
          [&](const FormulaPtr& f, const std::map<std::string, Elem>& th) -> Elem {
        switch (f->kind) {
          case FormulaKind::Prop: return th.at(f->name);
          case FormulaKind::Bottom: return a.zero();
          case FormulaKind::Not: return a.neg(ev(f->sub, th));
          case FormulaKind::Or: return a.join(ev(f->sub, th), ev(f->sub2, th));
          default: return box.get(f->term, f->sub);
        }
      };
      bool oracle_violation = false;
      std::size_t total = 1;
      for (std::size_t i = 0; i < props.size(); ++i) total *= a.size();
      for (std::size_t n = 0; n < total; ++n) {
        std::map<std::string, Elem> th;
        std::size_t code = n;
        for (const auto& p : props) {
          th[p] = code % a.size();
          code /= a.size();
        }
        for (const auto& t : box.term_universe)
          for (const auto& f : box.formula_universe)
            if (!a.leq(box.get(t, f), ev(f, th))) oracle_violation = true;
      }
      CHECK(jt_found == oracle_violation);
    }
  }
}

TEST_CASE("valuation budget truncation is explicit, never silent") {
  BoolAlg eight = BoolAlg::powerset(3);
  BoxTable box;
  box.formula_universe = closure_universe(
      {lp("p | q"), lp("r | s1"), lp("t1 | u1"), lp("v1 | w1")}, 0); // 8 props, 8^8 valuations
  box.term_universe = subterms(pt("x"));
  Report r = verify_full_lp(eight, box, {}, 1000);
  CHECK(r.truncated);
  REQUIRE(!r.notes.empty());
  CHECK(r.notes[0].find("truncated") != std::string::npos);
  CHECK(r.ok()); // truncation is a note, not a violation

  Report full = verify_full_lp(BoolAlg::powerset(1), minimal_model_table(), {}, 1u << 16);
  CHECK(!full.truncated);
}

TEST_CASE("total-mode Al-CS quantifies axiom instances in the universe") {
  ConstantSpec total;
  total.total = true;
  BoxTable box;
  box.formula_universe = closure_universe({lp("c:(p -> p | q)")}, 0);
  box.term_universe = subterms(pt("c"));
  BoolAlg two = BoolAlg::powerset(1);
  Report missing = verify_full_lp(two, box, total);
  REQUIRE(!missing.ok()); // box(c, p -> p|q) should be 1 under TCS
  CHECK(missing.violations[0].find("Al-CS (total)") != std::string::npos);
  box.set(pt("c"), lp("p -> p | q"), 1);
  CHECK(verify_full_lp(two, box, total).ok());
}

TEST_CASE("algebra file round trip (full-lp)") {
  BoxTable box = minimal_model_table();
  BoolAlg two = BoolAlg::powerset(1);
  ConstantSpec cs = parse_cs_file("c : p & p -> p\n", System::LP);
  std::string text = format_full_lp_file(two, box, cs);
  AlgebraFile file = parse_algebra_file(text);
  REQUIRE(file.kind == AlgebraFile::Kind::FullLp);
  CHECK(file.alg->size() == 2);
  CHECK(file.box.entries.size() == box.entries.size());
  for (const auto& [key, v] : box.entries) CHECK(file.box.get(key.first, key.second) == v);
  CHECK(file.cs.entry_count() == 1);
  CHECK(verify_full_lp(*file.alg, file.box, file.cs).ok());
}
