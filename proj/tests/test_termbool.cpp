#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "gen.hpp"
#include "lpwb/termbool.hpp"

using namespace lpwb;

namespace {
TermPtr t(const std::string& s) { return parse_term(s, Dialect::LPB); }
} // namespace

TEST_CASE("canonical forms collapse the Boolean structure") {
  CHECK(canonical_form(t("x + 0")) == canonical_form(t("x")));
  CHECK(canonical_form(t("x + -x")) == "1");
  CHECK(canonical_form(t("x*y + x*y")) == canonical_form(t("x*y")));
  CHECK(canonical_form(t("0")) == "0");
  CHECK(canonical_form(t("1")) == "1");
}

TEST_CASE("term_equal on the B-axiom shapes") {
  CHECK(term_equal(t("x + y"), t("y + x")));
  CHECK(!term_equal(t("x*y"), t("y*x")));
  CHECK(term_equal(t("x . (y + z)"), t("(x . y) + (x . z)")));
  CHECK(term_equal(t("!(x + 0)"), t("!x")));
  CHECK(term_equal(t("x + (y + z)"), t("(x + y) + z")));
  CHECK(term_equal(t("x . 1"), t("x")));
  CHECK(term_equal(t("x . -x"), t("0")));
  CHECK(term_equal(t("x + (y . z)"), t("(x + y) . (x + z)")));
  CHECK(!term_equal(t("x"), t("y")));
  CHECK(!term_equal(t("!x"), t("!y")));
  // Congruence digs into application arguments.
  CHECK(term_equal(t("(x + -x)*y"), t("1*y")));
  CHECK(!term_equal(t("1*y"), t("y")));
}

TEST_CASE("term_leq is the Boolean order") {
  CHECK(term_leq(t("0"), t("x")));
  CHECK(term_leq(t("x"), t("x + y")));
  CHECK(term_leq(t("x"), t("1")));
  CHECK(!term_leq(t("x"), t("y")));
  CHECK(!term_leq(t("x + y"), t("x")));
}

TEST_CASE("brute force oracle basics") {
  CHECK(brute_force_equal(t("x + -x"), t("1")));
  CHECK(brute_force_equal(t("x"), t("--x")));
  CHECK(!brute_force_equal(t("x*y"), t("x")));
  CHECK(brute_force_equal(t("!(x + 0)"), t("!x")));
  CHECK(!brute_force_equal(t("x*y"), t("y*x")));
}

TEST_CASE("brute force oracle enforces its atom cap") {
  TermPtr sum = mk_var("x1");
  for (int i = 2; i <= 22; ++i) sum = mk_sum(sum, mk_var("x" + std::to_string(i)));
  CHECK_THROWS_AS(brute_force_equal(sum, sum), BudgetError);
  CHECK(brute_force_equal(sum, sum, 25));
}

TEST_CASE("term_equal agrees with the oracle: exhaustive small universe") {
  std::vector<TermPtr> leaves = {mk_var("x"), mk_var("y"), mk_const("a"), mk_const("b"), mk_zero()};
  std::vector<TermPtr> universe = testgen::terms_up_to_size(3, leaves);
  for (const auto& s : universe)
    for (const auto& u : universe) {
      bool fast = term_equal(s, u);
      bool slow = brute_force_equal(s, u);
      if (fast != slow) {
        CAPTURE(print(s));
        CAPTURE(print(u));
        REQUIRE(fast == slow);
      }
    }
}

TEST_CASE("term_equal agrees with the oracle: random pairs up to size 10") {
  testgen::Gen gen(4242);
  for (int i = 0; i < 4000; ++i) {
    TermPtr s = gen.term(1 + gen.pick(10), Dialect::LPB);
    TermPtr u = gen.term(1 + gen.pick(10), Dialect::LPB);
    CAPTURE(print(s));
    CAPTURE(print(u));
    CHECK(term_equal(s, u) == brute_force_equal(s, u));
  }
}

TEST_CASE("the ten B-axiom columns and Eq1 hold under random instantiation") {
  testgen::Gen gen(31337);
  for (int i = 0; i < 1000; ++i) {
    TermPtr s = gen.term(1 + gen.pick(5), Dialect::LPB);
    TermPtr u = gen.term(1 + gen.pick(5), Dialect::LPB);
    TermPtr v = gen.term(1 + gen.pick(5), Dialect::LPB);
    CHECK(term_equal(mk_sum(s, u), mk_sum(u, s)));
    CHECK(term_equal(mk_meet(s, u), mk_meet(u, s)));
    CHECK(term_equal(mk_sum(s, mk_sum(u, v)), mk_sum(mk_sum(s, u), v)));
    CHECK(term_equal(mk_meet(s, mk_meet(u, v)), mk_meet(mk_meet(s, u), v)));
    CHECK(term_equal(mk_sum(s, mk_zero()), s));
    CHECK(term_equal(mk_meet(s, mk_one()), s));
    CHECK(term_equal(mk_sum(s, mk_neg(s)), mk_one()));
    CHECK(term_equal(mk_meet(s, mk_neg(s)), mk_zero()));
    CHECK(term_equal(mk_sum(s, mk_meet(u, v)), mk_meet(mk_sum(s, u), mk_sum(s, v))));
    CHECK(term_equal(mk_meet(s, mk_sum(u, v)), mk_sum(mk_meet(s, u), mk_meet(s, v))));
    CHECK(term_equal(s, s));
  }
}

TEST_CASE("term_equal is a congruence and an equivalence") {
  testgen::Gen gen(555);
  std::vector<TermPtr> pool;
  for (int i = 0; i < 60; ++i) pool.push_back(gen.term(1 + gen.pick(6), Dialect::LPB));
  for (std::size_t i = 0; i < pool.size(); ++i) {
    CHECK(term_equal(pool[i], pool[i]));
    for (std::size_t j = 0; j < pool.size(); ++j) {
      bool ij = term_equal(pool[i], pool[j]);
      CHECK(ij == term_equal(pool[j], pool[i]));
      if (!ij) continue;
      const TermPtr& u = pool[(i + j) % pool.size()];
      CHECK(term_equal(mk_sum(pool[i], u), mk_sum(pool[j], u)));
      CHECK(term_equal(mk_neg(pool[i]), mk_neg(pool[j])));
      CHECK(term_equal(mk_app(pool[i], u), mk_app(pool[j], u)));
      CHECK(term_equal(mk_app(u, pool[i]), mk_app(u, pool[j])));
      CHECK(term_equal(mk_bang(pool[i]), mk_bang(pool[j])));
      for (std::size_t k = 0; k < pool.size(); ++k)
        if (term_equal(pool[j], pool[k])) CHECK(term_equal(pool[i], pool[k]));
    }
  }
}

TEST_CASE("term_leq is a partial order with bottom 0 and top 1") {
  testgen::Gen gen(777);
  std::vector<TermPtr> pool;
  for (int i = 0; i < 40; ++i) pool.push_back(gen.term(1 + gen.pick(6), Dialect::LPB));
  for (const auto& s : pool) {
    CHECK(term_leq(mk_zero(), s));
    CHECK(term_leq(s, mk_one()));
    CHECK(term_leq(s, s));
    for (const auto& u : pool) {
      if (term_leq(s, u) && term_leq(u, s)) CHECK(term_equal(s, u));
      for (const auto& v : pool)
        if (term_leq(s, u) && term_leq(u, v)) CHECK(term_leq(s, v));
    }
  }
}
