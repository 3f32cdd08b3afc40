#pragma once

#include <map>
#include <random>
#include <vector>

#include "lpwb/syntax.hpp"

// Seeded random term/formula generators shared by the test binaries.
namespace lpwb::testgen {

class Gen {
public:
  explicit Gen(std::uint64_t seed) : rng_(seed) {}

  std::size_t pick(std::size_t n) { return std::uniform_int_distribution<std::size_t>(0, n - 1)(rng_); }

  TermPtr term(std::size_t max_size, Dialect d) {
    if (max_size <= 1) return leaf(d);
    switch (pick(d == Dialect::LPB ? 6 : 4)) {
      case 0: return leaf(d);
      case 1: return mk_bang(term(max_size - 1, d));
      case 2: {
        std::size_t l = 1 + pick(max_size - 1);
        return mk_sum(term(l, d), term(max_size - l, d));
      }
      case 3: {
        std::size_t l = 1 + pick(max_size - 1);
        return mk_app(term(l, d), term(max_size - l, d));
      }
      case 4: return mk_neg(term(max_size - 1, d));
      default: return mk_zero();
    }
  }

  FormulaPtr formula(std::size_t max_size, Dialect d) {
    if (max_size <= 1) return atom(d);
    switch (pick(d == Dialect::LPB ? 5 : 4)) {
      case 0: return atom(d);
      case 1: return mk_not(formula(max_size - 1, d));
      case 2: {
        std::size_t l = 1 + pick(max_size - 1);
        return mk_or(formula(l, d), formula(max_size - l, d));
      }
      case 3: {
        std::size_t l = 1 + pick(max_size / 2 + 1);
        return mk_just(term(l, d), formula(max_size - l > 0 ? max_size - l : 1, d));
      }
      default: {
        std::size_t l = 1 + pick(max_size - 1);
        return mk_eq(term(l, d), term(max_size - l, d));
      }
    }
  }

private:
  std::mt19937_64 rng_;

  TermPtr leaf(Dialect d) {
    static const char* vars[] = {"x", "y", "z"};
    static const char* consts[] = {"a", "b", "c"};
    std::size_t n = pick(d == Dialect::LPB ? 7 : 6);
    if (n < 3) return mk_var(vars[n]);
    if (n < 6) return mk_const(consts[n - 3]);
    return mk_zero();
  }

  FormulaPtr atom(Dialect d) {
    static const char* props[] = {"p", "q", "r"};
    (void)d;
    std::size_t n = pick(4);
    if (n < 3) return mk_prop(props[n]);
    return mk_bottom();
  }
};

// All LPB terms over the given leaves with exactly `size` nodes.
inline std::vector<TermPtr> terms_of_size(std::size_t size, const std::vector<TermPtr>& leaves) {
  static std::map<std::pair<std::size_t, std::string>, std::vector<TermPtr>> memo;
  std::string leaf_key;
  for (const auto& l : leaves) leaf_key += print(l) + ";";
  auto key = std::make_pair(size, leaf_key);
  auto it = memo.find(key);
  if (it != memo.end()) return it->second;
  std::vector<TermPtr> out;
  if (size == 1) {
    out = leaves;
  } else {
    for (const auto& t : terms_of_size(size - 1, leaves)) {
      out.push_back(mk_neg(t));
      out.push_back(mk_bang(t));
    }
    for (std::size_t l = 1; l < size - 1; ++l)
      for (const auto& a : terms_of_size(l, leaves))
        for (const auto& b : terms_of_size(size - 1 - l, leaves)) {
          out.push_back(mk_sum(a, b));
          out.push_back(mk_app(a, b));
        }
  }
  memo.emplace(key, out);
  return out;
}

inline std::vector<TermPtr> terms_up_to_size(std::size_t max_size, const std::vector<TermPtr>& leaves) {
  std::vector<TermPtr> out;
  for (std::size_t s = 1; s <= max_size; ++s) {
    auto ts = terms_of_size(s, leaves);
    out.insert(out.end(), ts.begin(), ts.end());
  }
  return out;
}

} // namespace lpwb::testgen
