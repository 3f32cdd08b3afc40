#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "gen.hpp"
#include "lpwb/syntax.hpp"

using namespace lpwb;

TEST_CASE("term parsing matches the grammar") {
  CHECK(equal(parse_term("(a*b)*c", Dialect::LP),
              mk_app(mk_app(mk_const("a"), mk_const("b")), mk_const("c"))));
  CHECK(equal(parse_term("a*b*c", Dialect::LP),
              mk_app(mk_app(mk_const("a"), mk_const("b")), mk_const("c"))));
  CHECK(equal(parse_term("x", Dialect::LP), mk_var("x")));
  CHECK(equal(parse_term("-(x + 0)", Dialect::LPB), mk_neg(mk_sum(mk_var("x"), mk_zero()))));
  CHECK_THROWS_AS(parse_term("-(x + 0)", Dialect::LP), ParseError);
  CHECK_THROWS_AS(parse_term("x +", Dialect::LP), ParseError);
  CHECK_THROWS_AS(parse_term("", Dialect::LP), ParseError);
}

TEST_CASE("term operator precedence: prefix > * > . > +") {
  CHECK(equal(parse_term("!x*y", Dialect::LP), mk_app(mk_bang(mk_var("x")), mk_var("y"))));
  CHECK(equal(parse_term("x + y*z", Dialect::LP), mk_sum(mk_var("x"), mk_app(mk_var("y"), mk_var("z")))));
  CHECK(equal(parse_term("x . y + z", Dialect::LPB),
              mk_sum(mk_meet(mk_var("x"), mk_var("y")), mk_var("z"))));
  CHECK(equal(parse_term("-x + y", Dialect::LPB), mk_sum(mk_neg(mk_var("x")), mk_var("y"))));
  CHECK(equal(parse_term("x+y+z", Dialect::LP),
              mk_sum(mk_sum(mk_var("x"), mk_var("y")), mk_var("z"))));
}

TEST_CASE("sugar expands to the primitive constructors") {
  CHECK(equal(parse_term("1", Dialect::LPB), mk_neg(mk_zero())));
  CHECK(equal(parse_term("x . y", Dialect::LPB),
              mk_neg(mk_sum(mk_neg(mk_var("x")), mk_neg(mk_var("y"))))));
  CHECK(equal(parse_formula("top", Dialect::LP), mk_not(mk_bottom())));
  CHECK(equal(parse_formula("p -> q", Dialect::LP), mk_or(mk_not(mk_prop("p")), mk_prop("q"))));
  CHECK(equal(parse_formula("p & q", Dialect::LP),
              mk_not(mk_or(mk_not(mk_prop("p")), mk_not(mk_prop("q"))))));
}

TEST_CASE("formula parsing and the ':' unit rule") {
  FormulaPtr sum_axiom = parse_formula("x:p | y:p -> (x+y):p", Dialect::LP);
  FormulaPtr expected =
      mk_or(mk_not(mk_or(mk_just(mk_var("x"), mk_prop("p")), mk_just(mk_var("y"), mk_prop("p")))),
            mk_just(mk_sum(mk_var("x"), mk_var("y")), mk_prop("p")));
  CHECK(equal(sum_axiom, expected));

  CHECK(equal(parse_formula("bot", Dialect::LP), mk_bottom()));
  CHECK(equal(parse_formula("x = y", Dialect::LPB), mk_eq(mk_var("x"), mk_var("y"))));
  CHECK_THROWS_AS(parse_formula("x = y", Dialect::LP), ParseError);

  // ':' is right associative and grabs the smallest unit.
  CHECK(equal(parse_formula("x:y:p", Dialect::LP),
              mk_just(mk_var("x"), mk_just(mk_var("y"), mk_prop("p")))));
  CHECK(equal(parse_formula("~x:p", Dialect::LP), mk_not(mk_just(mk_var("x"), mk_prop("p")))));
  CHECK(equal(parse_formula("x:p -> p", Dialect::LP),
              mk_imp(mk_just(mk_var("x"), mk_prop("p")), mk_prop("p"))));
  CHECK(equal(parse_formula("x + y:p", Dialect::LP),
              mk_just(mk_sum(mk_var("x"), mk_var("y")), mk_prop("p"))));
  CHECK(equal(parse_formula("p -> q -> r", Dialect::LP),
              mk_imp(mk_prop("p"), mk_imp(mk_prop("q"), mk_prop("r")))));
  CHECK(equal(parse_formula("(p)", Dialect::LP), mk_prop("p")));
  CHECK(equal(parse_formula("(x+y):p", Dialect::LP),
              mk_just(mk_sum(mk_var("x"), mk_var("y")), mk_prop("p"))));
}

TEST_CASE("unicode aliases are accepted on input") {
  CHECK(equal(parse_formula("¬p ∨ q", Dialect::LP), parse_formula("~p | q", Dialect::LP)));
  CHECK(equal(parse_formula("p → q", Dialect::LP), parse_formula("p -> q", Dialect::LP)));
  CHECK(equal(parse_formula("p ↔ q", Dialect::LP), parse_formula("p <-> q", Dialect::LP)));
  CHECK(equal(parse_formula("⊥ ∧ ⊤", Dialect::LP), parse_formula("bot & top", Dialect::LP)));
  CHECK(equal(parse_formula("x ≈ y", Dialect::LPB), parse_formula("x = y", Dialect::LPB)));
  CHECK(equal(parse_term("a·b", Dialect::LP), parse_term("a*b", Dialect::LP)));
}

TEST_CASE("print/parse round trip on random ASTs") {
  testgen::Gen gen(20240811);
  for (int i = 0; i < 3000; ++i) {
    Dialect d = i % 2 ? Dialect::LPB : Dialect::LP;
    TermPtr t = gen.term(1 + gen.pick(12), d);
    CAPTURE(print(t));
    CHECK(equal(parse_term(print(t), d), t));
    FormulaPtr f = gen.formula(1 + gen.pick(12), d);
    CAPTURE(print(f));
    CHECK(equal(parse_formula(print(f), d), f));
  }
}

TEST_CASE("parsing under LP never yields LPB nodes") {
  testgen::Gen gen(7);
  for (int i = 0; i < 500; ++i) {
    FormulaPtr f = gen.formula(1 + gen.pick(10), Dialect::LP);
    CHECK(formula_in_dialect(parse_formula(print(f), Dialect::LP), Dialect::LP));
  }
}

TEST_CASE("closure_universe examples") {
  FormulaPtr xp = parse_formula("x:p", Dialect::LP);
  FormulaSet u0 = closure_universe({xp}, 0);
  CHECK(u0.size() == 2);
  CHECK(u0.count(xp));
  CHECK(u0.count(mk_prop("p")));

  FormulaSet u1 = closure_universe({parse_formula("p | q", Dialect::LP)}, 0);
  CHECK(u1.size() == 3);

  FormulaPtr nested = parse_formula("!x:x:p", Dialect::LP);
  FormulaSet u2 = closure_universe({nested}, 0);
  CHECK(u2.size() == 3);
  CHECK(u2.count(parse_formula("x:p", Dialect::LP)));
  CHECK(u2.count(mk_prop("p")));
}

TEST_CASE("closure_universe is monotone and subformula-closed") {
  testgen::Gen gen(99);
  for (int i = 0; i < 60; ++i) {
    FormulaPtr a = gen.formula(1 + gen.pick(6), Dialect::LP);
    FormulaPtr b = gen.formula(1 + gen.pick(6), Dialect::LP);
    for (std::size_t depth = 0; depth <= 1; ++depth) {
      FormulaSet small = closure_universe({a}, depth);
      FormulaSet big = closure_universe({a, b}, depth);
      for (const auto& f : small) CHECK(big.count(f));
      FormulaSet deeper = closure_universe({a}, depth + 1);
      for (const auto& f : small) CHECK(deeper.count(f));
      // Idempotent at depth 0 on its own output (the output is closed).
      std::vector<FormulaPtr> out(small.begin(), small.end());
      CHECK(closure_universe(out, 0) == small);
    }
  }
}
