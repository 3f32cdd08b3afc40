#include "lpwb/lpbalg.hpp"

#include <algorithm>

namespace lpwb {

Elem TermStructure::interp_of(const std::string& c) const {
  auto it = interp.find(c);
  if (it == interp.end()) throw InputError("constant '" + c + "' has no interpretation");
  return it->second;
}

void TermStructure::validate() const {
  std::size_t n = carrier.size();
  if (app.size() != n) throw InputError("app table has wrong arity");
  for (const auto& row : app) {
    if (row.size() != n) throw InputError("app table has a short row");
    for (Elem v : row)
      if (v >= n) throw InputError("app leaves the carrier");
  }
  if (bang.size() != n) throw InputError("bang table has wrong arity");
  for (Elem v : bang)
    if (v >= n) throw InputError("bang leaves the carrier");
  for (const auto& [c, v] : interp)
    if (v >= n) throw InputError("interpretation of '" + c + "' leaves the carrier");
}

void mint_missing_constants(TermStructure& ts, const std::set<std::string>& constants) {
  std::set<Elem> taken;
  for (const auto& [c, v] : ts.interp) taken.insert(v);
  for (const auto& c : constants) {
    if (ts.interp.count(c)) continue;
    if (!ts.carrier.is_powerset())
      throw InputError("cannot mint an interpretation for '" + c + "': carrier is table-backed");
    bool found = false;
    for (unsigned i = 0; i < ts.carrier.atoms(); ++i) {
      Elem atom = Elem{1} << i;
      if (!taken.count(atom)) {
        ts.interp[c] = atom;
        taken.insert(atom);
        found = true;
        break;
      }
    }
    if (!found) throw InputError("no spare atom left to interpret '" + c + "'");
  }
}

Elem eval_term(const TermPtr& t, const std::map<std::string, Elem>& v, const TermStructure& ts) {
  switch (t->kind) {
    case TermKind::Var: {
      auto it = v.find(t->name);
      if (it == v.end()) throw InputError("unbound proof variable '" + t->name + "'");
      return it->second;
    }
    case TermKind::Const: return ts.interp_of(t->name);
    case TermKind::Zero: return ts.carrier.zero();
    case TermKind::Neg: return ts.carrier.neg(eval_term(t->left, v, ts));
    case TermKind::Sum:
      return ts.carrier.join(eval_term(t->left, v, ts), eval_term(t->right, v, ts));
    case TermKind::App:
      return ts.app[eval_term(t->left, v, ts)][eval_term(t->right, v, ts)];
    case TermKind::Bang: return ts.bang[eval_term(t->left, v, ts)];
  }
  return ts.carrier.zero();
}

namespace {

bool elem_pair_less(const std::pair<Elem, FormulaPtr>& a, const std::pair<Elem, FormulaPtr>& b) {
  if (a.first != b.first) return a.first < b.first;
  return compare(*a.second, *b.second) < 0;
}

bool key_pair_less(const std::pair<std::string, FormulaPtr>& a,
                   const std::pair<std::string, FormulaPtr>& b) {
  if (int c = a.first.compare(b.first)) return c < 0;
  return compare(*a.second, *b.second) < 0;
}

} // namespace

LpbAlgebra::LpbAlgebra() : box(elem_pair_less) {}

Elem LpbAlgebra::box_get(Elem alpha, const FormulaPtr& f) const {
  auto it = box.find({alpha, f});
  return it == box.end() ? formula_alg.zero() : it->second;
}

void LpbAlgebra::box_set(Elem alpha, const FormulaPtr& f, Elem v) {
  box[{alpha, f}] = v;
}

Elem eval_formula(const FormulaPtr& f, const std::map<std::string, Elem>& theta,
                  const std::map<std::string, Elem>& v, const LpbAlgebra& alg) {
  const BoolAlg& a = alg.formula_alg;
  switch (f->kind) {
    case FormulaKind::Prop: {
      auto it = theta.find(f->name);
      return it == theta.end() ? a.zero() : it->second;
    }
    case FormulaKind::Bottom: return a.zero();
    case FormulaKind::Not: return a.neg(eval_formula(f->sub, theta, v, alg));
    case FormulaKind::Or:
      return a.join(eval_formula(f->sub, theta, v, alg), eval_formula(f->sub2, theta, v, alg));
    case FormulaKind::Just:
      if (!alg.formula_universe.count(f->sub))
        throw InputError("':' body outside the formula universe: " + print(f->sub));
      return alg.box_get(eval_term(f->term, v, alg.ts), f->sub);
    case FormulaKind::Eq:
      return eval_term(f->term, v, alg.ts) == eval_term(f->term2, v, alg.ts) ? a.one() : a.zero();
  }
  return a.zero();
}

namespace {

void require_closed_universe(const FormulaSet& universe) {
  for (const auto& f : universe)
    for (const auto& g : subformulas(f))
      if (!universe.count(g))
        throw InputError("formula universe not closed under subformulas: missing " + print(g));
}

std::set<std::string> universe_props(const FormulaSet& universe) {
  std::set<std::string> out;
  for (const auto& f : universe) {
    auto ps = props_of(f);
    out.insert(ps.begin(), ps.end());
  }
  return out;
}

std::set<std::string> universe_vars(const FormulaSet& universe) {
  std::set<std::string> out;
  for (const auto& f : universe)
    for (const auto& t : terms_of(f)) {
      auto vs = vars_of(t);
      out.insert(vs.begin(), vs.end());
    }
  return out;
}

std::size_t pow_clamped(std::size_t base, std::size_t exp, std::size_t clamp) {
  std::size_t r = 1;
  for (std::size_t i = 0; i < exp; ++i) {
    if (base != 0 && r > clamp / base) return clamp + 1;
    r *= base;
  }
  return r;
}

} // namespace

Report verify_full_lpb(const LpbAlgebra& alg, const ConstantSpec& cs,
                       const FormulaSet& theorem_oracle, SweepBudget budget) {
  alg.ts.validate();
  require_closed_universe(alg.formula_universe);
  const BoolAlg& a = alg.formula_alg;
  const BoolAlg& tc = alg.ts.carrier;
  for (const auto& [key, val] : alg.box) {
    if (key.first >= tc.size())
      throw InputError("box row " + tc.show(key.first) + " outside the term carrier");
    if (val >= a.size())
      throw InputError("box value " + a.show(val) + " outside the formula carrier");
  }
  Report report;

  for (Elem alpha = 0; alpha < tc.size(); ++alpha) {
    for (Elem beta = 0; beta < tc.size(); ++beta) {
      for (const auto& chi : alg.formula_universe) {
        FormulaPtr phi, psi;
        if (match_imp(chi, phi, psi)) {
          if (!a.leq(a.meet(alg.box_get(alpha, chi), alg.box_get(beta, phi)),
                     alg.box_get(alg.ts.app[alpha][beta], psi)))
            report.violation("Al-Appl at (alpha=" + tc.show(alpha) + ", beta=" + tc.show(beta) +
                             ", " + print(chi) + ")");
        }
        if (!a.leq(a.join(alg.box_get(alpha, chi), alg.box_get(beta, chi)),
                   alg.box_get(tc.join(alpha, beta), chi)))
          report.violation("Al-Sum at (alpha=" + tc.show(alpha) + ", beta=" + tc.show(beta) +
                           ", " + print(chi) + ")");
      }
    }
  }

  for (const auto& phi : theorem_oracle)
    if (alg.box_get(tc.one(), phi) != a.one())
      report.violation("Al-1 at " + print(phi));

  for (const auto& [c, fs] : cs.entries) {
    auto it = alg.ts.interp.find(c);
    if (it == alg.ts.interp.end()) {
      report.violation("Al-CS: constant '" + c + "' has no interpretation");
      continue;
    }
    for (const auto& phi : fs) {
      if (!alg.formula_universe.count(phi)) continue;
      if (alg.box_get(it->second, phi) != a.one())
        report.violation("Al-CS at (" + c + ", " + print(phi) + ")");
    }
  }

  for (const auto& f : alg.formula_universe) {
    if (f->kind != FormulaKind::Just) continue;
    for (Elem alpha = 0; alpha < tc.size(); ++alpha)
      if (!a.leq(alg.box_get(alpha, f->sub), alg.box_get(alg.ts.bang[alpha], f)))
        report.violation("Al-j4 at (alpha=" + tc.show(alpha) + ", " + print(f) + ")");
  }

  // Al-jT: all valuations theta and all v, budgeted on the product space.
  std::set<std::string> prop_set = universe_props(alg.formula_universe);
  std::set<std::string> var_set = universe_vars(alg.formula_universe);
  std::vector<std::string> props(prop_set.begin(), prop_set.end());
  std::vector<std::string> vars(var_set.begin(), var_set.end());
  std::size_t theta_space = pow_clamped(a.size(), props.size(), budget.assignments);
  std::size_t v_space = pow_clamped(tc.size(), vars.size(), budget.assignments);
  std::size_t total = theta_space > budget.assignments / std::max<std::size_t>(v_space, 1)
                          ? budget.assignments + 1
                          : theta_space * v_space;
  std::size_t count = std::min(total, budget.assignments);
  if (total > budget.assignments) {
    report.truncated = true;
    report.notes.push_back("Al-jT assignment space (" + std::to_string(a.size()) + "^" +
                           std::to_string(props.size()) + " * " + std::to_string(tc.size()) + "^" +
                           std::to_string(vars.size()) + ") truncated to the first " +
                           std::to_string(budget.assignments));
  }

  std::set<std::pair<Elem, std::string>> reported;
  std::map<std::string, Elem> theta, v;
  for (std::size_t n = 0; n < count; ++n) {
    std::size_t code = n;
    for (const auto& p : props) {
      theta[p] = static_cast<Elem>(code % a.size());
      code /= a.size();
    }
    for (const auto& x : vars) {
      v[x] = static_cast<Elem>(code % tc.size());
      code /= tc.size();
    }
    for (const auto& [key, val] : alg.box) {
      if (val == a.zero()) continue;
      if (!alg.formula_universe.count(key.second)) continue;
      if (!a.leq(val, eval_formula(key.second, theta, v, alg))) {
        auto mark = std::make_pair(key.first, print(key.second));
        if (reported.insert(mark).second)
          report.violation("Al-jT at (alpha=" + tc.show(key.first) + ", " + print(key.second) + ")");
      }
    }
  }
  return report;
}

// ---------------------------------------------------------------- polynomials

namespace {

Polynomial make_poly(std::vector<std::string> vars, std::vector<Elem> corners) {
  // Drop variables the corner table does not depend on.
  bool changed = true;
  while (changed) {
    changed = false;
    for (std::size_t i = 0; i < vars.size(); ++i) {
      std::size_t bit = std::size_t{1} << i;
      bool independent = true;
      for (std::size_t mask = 0; mask < corners.size(); ++mask)
        if (!(mask & bit) && corners[mask] != corners[mask | bit]) {
          independent = false;
          break;
        }
      if (!independent) continue;
      std::vector<Elem> reduced(corners.size() / 2);
      for (std::size_t mask = 0, out = 0; mask < corners.size(); ++mask)
        if (!(mask & bit)) reduced[out++] = corners[mask];
      // Removing bit i compacts the higher bits by one position.
      corners = std::move(reduced);
      vars.erase(vars.begin() + static_cast<std::ptrdiff_t>(i));
      changed = true;
      break;
    }
  }
  Polynomial p;
  p.vars = std::move(vars);
  p.corners = std::move(corners);
  return p;
}

Polynomial expand(const Polynomial& f, const std::vector<std::string>& vars) {
  std::vector<std::size_t> pos(f.vars.size());
  for (std::size_t i = 0; i < f.vars.size(); ++i)
    pos[i] = static_cast<std::size_t>(
        std::find(vars.begin(), vars.end(), f.vars[i]) - vars.begin());
  std::vector<Elem> corners(std::size_t{1} << vars.size());
  for (std::size_t mask = 0; mask < corners.size(); ++mask) {
    std::size_t fmask = 0;
    for (std::size_t i = 0; i < f.vars.size(); ++i)
      if (mask & (std::size_t{1} << pos[i])) fmask |= std::size_t{1} << i;
    corners[mask] = f.corners[fmask];
  }
  Polynomial out;
  out.vars = vars;
  out.corners = std::move(corners);
  return out;
}

} // namespace

Polynomial poly_const(Elem a) {
  Polynomial p;
  p.corners = {a};
  return p;
}

Polynomial poly_var(const std::string& x, const BoolAlg& t) {
  Polynomial p;
  p.vars = {x};
  p.corners = {t.zero(), t.one()};
  return p;
}

Polynomial poly_neg(const BoolAlg& t, const Polynomial& f) {
  std::vector<Elem> corners(f.corners.size());
  for (std::size_t i = 0; i < corners.size(); ++i) corners[i] = t.neg(f.corners[i]);
  return make_poly(f.vars, std::move(corners));
}

Polynomial poly_join(const BoolAlg& t, const Polynomial& f, const Polynomial& g) {
  std::vector<std::string> vars;
  std::set_union(f.vars.begin(), f.vars.end(), g.vars.begin(), g.vars.end(),
                 std::back_inserter(vars));
  Polynomial fe = expand(f, vars);
  Polynomial ge = expand(g, vars);
  std::vector<Elem> corners(fe.corners.size());
  for (std::size_t i = 0; i < corners.size(); ++i)
    corners[i] = t.join(fe.corners[i], ge.corners[i]);
  return make_poly(std::move(vars), std::move(corners));
}

Elem poly_eval(const BoolAlg& t, const Polynomial& f, const std::map<std::string, Elem>& v) {
  Elem out = t.zero();
  for (std::size_t mask = 0; mask < f.corners.size(); ++mask) {
    Elem minterm = t.one();
    for (std::size_t i = 0; i < f.vars.size(); ++i) {
      auto it = v.find(f.vars[i]);
      if (it == v.end()) throw InputError("unbound polynomial variable '" + f.vars[i] + "'");
      Elem lit = (mask & (std::size_t{1} << i)) ? it->second : t.neg(it->second);
      minterm = t.meet(minterm, lit);
    }
    out = t.join(out, t.meet(f.corners[mask], minterm));
  }
  return out;
}

std::string poly_print(const Polynomial& f, const BoolAlg& t) {
  if (f.is_constant()) {
    if (f.constant() == t.zero()) return "0";
    if (f.constant() == t.one()) return "1";
    return "e" + t.show(f.constant());
  }
  std::string out;
  for (std::size_t mask = 0; mask < f.corners.size(); ++mask) {
    if (f.corners[mask] == t.zero()) continue;
    std::string minterm;
    if (f.corners[mask] != t.one()) minterm = "e" + t.show(f.corners[mask]);
    for (std::size_t i = 0; i < f.vars.size(); ++i) {
      if (!minterm.empty()) minterm += " . ";
      minterm += (mask & (std::size_t{1} << i)) ? f.vars[i] : "-" + f.vars[i];
    }
    if (!out.empty()) out += " + ";
    out += minterm;
  }
  return out.empty() ? "0" : out;
}

PolyExt extend_ops(const TermStructure& ts) {
  auto app_table = ts.app;
  auto bang_table = ts.bang;
  PolyExt e;
  e.app = [app_table](const Polynomial& f, const Polynomial& g) {
    if (f.is_constant() && g.is_constant())
      return poly_const(app_table[f.constant()][g.constant()]);
    return f;
  };
  e.bang = [bang_table](const Polynomial& f) {
    if (f.is_constant()) return poly_const(bang_table[f.constant()]);
    return f;
  };
  return e;
}

void validate_extension(const TermStructure& ts, const PolyExt& ext) {
  if (!ext.app || !ext.bang) throw InputError("polynomial extension is incomplete");
  for (Elem a = 0; a < ts.carrier.size(); ++a) {
    Polynomial pa = poly_const(a);
    if (!(ext.bang(pa) == poly_const(ts.bang[a])))
      throw InputError("extension disagrees with !_T at " + ts.carrier.show(a));
    for (Elem b = 0; b < ts.carrier.size(); ++b)
      if (!(ext.app(pa, poly_const(b)) == poly_const(ts.app[a][b])))
        throw InputError("extension disagrees with *_T at (" + ts.carrier.show(a) + ", " +
                         ts.carrier.show(b) + ")");
  }
}

Polynomial interp_poly(const TermPtr& t, const TermStructure& ts, const PolyExt& ext) {
  switch (t->kind) {
    case TermKind::Var: return poly_var(t->name, ts.carrier);
    case TermKind::Const: return poly_const(ts.interp_of(t->name));
    case TermKind::Zero: return poly_const(ts.carrier.zero());
    case TermKind::Neg: return poly_neg(ts.carrier, interp_poly(t->left, ts, ext));
    case TermKind::Sum:
      return poly_join(ts.carrier, interp_poly(t->left, ts, ext), interp_poly(t->right, ts, ext));
    case TermKind::App: return ext.app(interp_poly(t->left, ts, ext), interp_poly(t->right, ts, ext));
    case TermKind::Bang: return ext.bang(interp_poly(t->left, ts, ext));
  }
  return poly_const(ts.carrier.zero());
}

bool poly_equal(const Polynomial& f, const Polynomial& g, const BoolAlg& t, std::size_t budget) {
  std::vector<std::string> vars;
  std::set_union(f.vars.begin(), f.vars.end(), g.vars.begin(), g.vars.end(),
                 std::back_inserter(vars));
  std::size_t space = pow_clamped(t.size(), vars.size(), budget);
  if (space > budget)
    throw BudgetError("poly_equal: assignment space " + std::to_string(t.size()) + "^" +
                      std::to_string(vars.size()) + " exceeds the budget");
  std::map<std::string, Elem> v;
  for (std::size_t n = 0; n < space; ++n) {
    std::size_t code = n;
    for (const auto& x : vars) {
      v[x] = static_cast<Elem>(code % t.size());
      code /= t.size();
    }
    if (poly_eval(t, f, v) != poly_eval(t, g, v)) return false;
  }
  return true;
}

PolyLpbAlgebra::PolyLpbAlgebra() : box(key_pair_less) {}

Elem PolyLpbAlgebra::box_get(const Polynomial& p, const FormulaPtr& f) const {
  auto it = box.find({poly_print(p, ts.carrier), f});
  return it == box.end() ? formula_alg.zero() : it->second;
}

bool PolyLpbAlgebra::box_declare(const Polynomial& p, const FormulaPtr& f, Elem v) {
  std::string key = poly_print(p, ts.carrier);
  polys.emplace(key, p);
  auto [it, fresh] = box.emplace(std::make_pair(key, f), v);
  if (!fresh && it->second != v) {
    keying_violations.push_back("box keyed inconsistently across equal polynomials at (" + key +
                                ", " + print(f) + "): " + formula_alg.show(it->second) + " vs " +
                                formula_alg.show(v));
    return false;
  }
  return true;
}

Report verify_poly_lpb(const PolyLpbAlgebra& alg, const PolyExt& ext, const ConstantSpec& cs,
                       const FormulaSet& theorem_oracle, SweepBudget budget) {
  alg.ts.validate();
  validate_extension(alg.ts, ext);
  require_closed_universe(alg.formula_universe);
  const BoolAlg& a = alg.formula_alg;
  const BoolAlg& tc = alg.ts.carrier;
  Report report;
  for (const auto& v : alg.keying_violations) report.violation(v);

  // Declared polynomial classes: the I~ images of the term universe plus
  // anything the box mentions.
  std::map<std::string, Polynomial> declared = alg.polys;
  std::map<TermPtr, Polynomial, TermLess> interp_memo;
  auto interp_of = [&](const TermPtr& t) -> const Polynomial& {
    auto it = interp_memo.find(t);
    if (it == interp_memo.end())
      it = interp_memo.emplace(t, interp_poly(t, alg.ts, ext)).first;
    return it->second;
  };
  for (const auto& t : alg.term_universe) {
    const Polynomial& p = interp_of(t);
    declared.emplace(poly_print(p, tc), p);
  }

  for (const auto& [ka, pa] : declared) {
    for (const auto& [kb, pb] : declared) {
      Polynomial papp = ext.app(pa, pb);
      auto it_app = declared.find(poly_print(papp, tc));
      Polynomial psum = poly_join(tc, pa, pb);
      auto it_sum = declared.find(poly_print(psum, tc));
      for (const auto& chi : alg.formula_universe) {
        FormulaPtr phi, psi;
        if (it_app != declared.end() && match_imp(chi, phi, psi)) {
          if (!a.leq(a.meet(alg.box_get(pa, chi), alg.box_get(pb, phi)),
                     alg.box_get(papp, psi)))
            report.violation("Al-Appl at (" + ka + ", " + kb + ", " + print(chi) + ")");
        }
        if (it_sum != declared.end()) {
          if (!a.leq(a.join(alg.box_get(pa, chi), alg.box_get(pb, chi)), alg.box_get(psum, chi)))
            report.violation("Al-Sum at (" + ka + ", " + kb + ", " + print(chi) + ")");
        }
      }
    }
  }

  Polynomial one_p = poly_const(tc.one());
  for (const auto& phi : theorem_oracle)
    if (alg.box_get(one_p, phi) != a.one()) report.violation("Al-1 at " + print(phi));

  for (const auto& [c, fs] : cs.entries) {
    auto it = alg.ts.interp.find(c);
    if (it == alg.ts.interp.end()) {
      report.violation("Al-CS: constant '" + c + "' has no interpretation");
      continue;
    }
    for (const auto& phi : fs) {
      if (!alg.formula_universe.count(phi)) continue;
      if (alg.box_get(poly_const(it->second), phi) != a.one())
        report.violation("Al-CS at (" + c + ", " + print(phi) + ")");
    }
  }

  for (const auto& f : alg.formula_universe) {
    if (f->kind != FormulaKind::Just) continue;
    const Polynomial& p = interp_of(f->term);
    if (!a.leq(alg.box_get(p, f->sub), alg.box_get(ext.bang(p), f)))
      report.violation("Al-j4 at (" + poly_print(p, tc) + ", " + print(f) + ")");
  }

  // Al-jT: valuations only; polynomials absorb the proof variables.
  std::set<std::string> prop_set = universe_props(alg.formula_universe);
  std::vector<std::string> props(prop_set.begin(), prop_set.end());
  std::size_t space = pow_clamped(a.size(), props.size(), budget.assignments);
  std::size_t count = std::min(space, budget.assignments);
  if (space > budget.assignments) {
    report.truncated = true;
    report.notes.push_back("Al-jT valuation space truncated to the first " +
                           std::to_string(budget.assignments));
  }

  std::function<Elem(const FormulaPtr&, const std::map<std::string, Elem>&)> value =
      [&](const FormulaPtr& f, const std::map<std::string, Elem>& theta) -> Elem {
    switch (f->kind) {
      case FormulaKind::Prop: {
        auto it = theta.find(f->name);
        return it == theta.end() ? a.zero() : it->second;
      }
      case FormulaKind::Bottom: return a.zero();
      case FormulaKind::Not: return a.neg(value(f->sub, theta));
      case FormulaKind::Or: return a.join(value(f->sub, theta), value(f->sub2, theta));
      case FormulaKind::Just: return alg.box_get(interp_of(f->term), f->sub);
      case FormulaKind::Eq:
        return poly_print(interp_of(f->term), tc) == poly_print(interp_of(f->term2), tc)
                   ? a.one()
                   : a.zero();
    }
    return a.zero();
  };

  std::set<std::pair<std::string, std::string>> reported;
  std::map<std::string, Elem> theta;
  for (std::size_t n = 0; n < count; ++n) {
    std::size_t code = n;
    for (const auto& p : props) {
      theta[p] = static_cast<Elem>(code % a.size());
      code /= a.size();
    }
    for (const auto& [key, val] : alg.box) {
      if (val == a.zero()) continue;
      if (!alg.formula_universe.count(key.second)) continue;
      if (!a.leq(val, value(key.second, theta))) {
        auto mark = std::make_pair(key.first, print(key.second));
        if (reported.insert(mark).second)
          report.violation("Al-jT at (" + key.first + ", " + print(key.second) + ")");
      }
    }
  }
  return report;
}

// ------------------------------------------------------------------ bi-Stone

BiStoneResult bi_stone(const LpbAlgebra& alg) {
  alg.ts.validate();
  StoneResult gs = stone(alg.ts.carrier);
  StoneResult fs = stone(alg.formula_alg);
  const auto& g = gs.witness;
  const auto& f = fs.witness;

  BiStoneResult out;
  out.g = gs.witness;
  out.f = fs.witness;
  out.image.formula_alg = fs.algebra;
  out.image.formula_universe = alg.formula_universe;

  TermStructure pts;
  pts.carrier = gs.algebra;
  std::size_t n = alg.ts.carrier.size();
  pts.app.assign(n, std::vector<Elem>(n, 0));
  pts.bang.assign(n, 0);
  for (Elem alpha = 0; alpha < n; ++alpha) {
    pts.bang[g(alpha)] = g(alg.ts.bang[alpha]);
    for (Elem beta = 0; beta < n; ++beta)
      pts.app[g(alpha)][g(beta)] = g(alg.ts.app[alpha][beta]);
  }
  for (const auto& [c, v] : alg.ts.interp) pts.interp[c] = g(v);
  out.image.ts = std::move(pts);

  for (const auto& [key, v] : alg.box) out.image.box_set(g(key.first), key.second, f(v));
  return out;
}

namespace {

void check_iso(const BoolAlg& a, const BoolAlg& b, const IsoWitness& w, const std::string& name,
               Report& report) {
  if (a.size() != b.size() || w.forward.size() != a.size()) {
    report.violation(name + " is not a bijection between the carriers");
    return;
  }
  std::vector<bool> hit(b.size(), false);
  for (Elem x = 0; x < a.size(); ++x) {
    if (w(x) >= b.size() || hit[w(x)]) {
      report.violation(name + " is not injective at " + a.show(x));
      return;
    }
    hit[w(x)] = true;
  }
  if (w(a.zero()) != b.zero()) report.violation(name + " does not preserve 0");
  for (Elem x = 0; x < a.size(); ++x) {
    if (w(a.neg(x)) != b.neg(w(x)))
      report.violation(name + " does not preserve complement at " + a.show(x));
    for (Elem y = 0; y < a.size(); ++y)
      if (w(a.join(x, y)) != b.join(w(x), w(y)))
        report.violation(name + " does not preserve join at (" + a.show(x) + "," + a.show(y) + ")");
  }
}

} // namespace

Report verify_bi_isomorphism(const LpbAlgebra& a, const LpbAlgebra& b, const IsoWitness& f,
                             const IsoWitness& g) {
  Report report;
  check_iso(a.formula_alg, b.formula_alg, f, "f", report);
  check_iso(a.ts.carrier, b.ts.carrier, g, "g", report);
  if (!report.ok()) return report;

  for (Elem alpha = 0; alpha < a.ts.carrier.size(); ++alpha)
    for (const auto& phi : a.formula_universe)
      if (f(a.box_get(alpha, phi)) != b.box_get(g(alpha), phi))
        report.violation("f(Box_alpha(phi)) != Box'_{g(alpha)}(phi) at (alpha=" +
                         a.ts.carrier.show(alpha) + ", " + print(phi) + ")");

  for (const auto& [c, v] : a.ts.interp) {
    auto it = b.ts.interp.find(c);
    if (it == b.ts.interp.end() || g(v) != it->second)
      report.violation("g(I(" + c + ")) != I'(" + c + ")");
  }
  for (Elem alpha = 0; alpha < a.ts.carrier.size(); ++alpha) {
    if (g(a.ts.bang[alpha]) != b.ts.bang[g(alpha)])
      report.violation("g(!alpha) != !'g(alpha) at " + a.ts.carrier.show(alpha));
    for (Elem beta = 0; beta < a.ts.carrier.size(); ++beta)
      if (g(a.ts.app[alpha][beta]) != b.ts.app[g(alpha)][g(beta)])
        report.violation("g(alpha*beta) != g(alpha)*'g(beta) at (" + a.ts.carrier.show(alpha) +
                         "," + a.ts.carrier.show(beta) + ")");
  }
  return report;
}

Polynomial poly_map(const IsoWitness& g, const Polynomial& p) {
  std::vector<Elem> corners(p.corners.size());
  for (std::size_t i = 0; i < corners.size(); ++i) corners[i] = g(p.corners[i]);
  Polynomial out;
  out.vars = p.vars;
  out.corners = std::move(corners);
  return out;
}

BiStonePolyResult bi_stone_poly(const PolyLpbAlgebra& alg) {
  alg.ts.validate();
  StoneResult gs = stone(alg.ts.carrier);
  StoneResult fs = stone(alg.formula_alg);
  const auto& g = gs.witness;
  const auto& f = fs.witness;

  BiStonePolyResult out;
  out.g = gs.witness;
  out.f = fs.witness;
  out.image.formula_alg = fs.algebra;
  out.image.formula_universe = alg.formula_universe;
  out.image.term_universe = alg.term_universe;

  TermStructure pts;
  pts.carrier = gs.algebra;
  std::size_t n = alg.ts.carrier.size();
  pts.app.assign(n, std::vector<Elem>(n, 0));
  pts.bang.assign(n, 0);
  for (Elem alpha = 0; alpha < n; ++alpha) {
    pts.bang[g(alpha)] = g(alg.ts.bang[alpha]);
    for (Elem beta = 0; beta < n; ++beta)
      pts.app[g(alpha)][g(beta)] = g(alg.ts.app[alpha][beta]);
  }
  for (const auto& [c, v] : alg.ts.interp) pts.interp[c] = g(v);
  out.image.ts = std::move(pts);

  for (const auto& [key, p] : alg.polys) {
    Polynomial mapped = poly_map(g, p);
    out.image.polys.emplace(poly_print(mapped, out.image.ts.carrier), mapped);
  }
  for (const auto& [key, v] : alg.box)
    out.image.box_declare(poly_map(g, alg.polys.at(key.first)), key.second, f(v));
  return out;
}

Report verify_bi_isomorphism_poly(const PolyLpbAlgebra& a, const PolyLpbAlgebra& b,
                                  const IsoWitness& f, const IsoWitness& g, const PolyExt& ext_a,
                                  const PolyExt& ext_b) {
  Report report;
  check_iso(a.formula_alg, b.formula_alg, f, "f", report);
  check_iso(a.ts.carrier, b.ts.carrier, g, "g", report);
  if (!report.ok()) return report;

  for (const auto& [key, p] : a.polys)
    for (const auto& phi : a.formula_universe)
      if (f(a.box_get(p, phi)) != b.box_get(poly_map(g, p), phi))
        report.violation("f(Box_alpha(phi)) != Box'_{g(alpha)}(phi) at (" + key + ", " +
                         print(phi) + ")");

  for (const auto& [c, v] : a.ts.interp) {
    auto it = b.ts.interp.find(c);
    if (it == b.ts.interp.end() || g(v) != it->second)
      report.violation("g(I(" + c + ")) != I'(" + c + ")");
  }

  for (const auto& [ka, pa] : a.polys) {
    if (!(poly_map(g, ext_a.bang(pa)) == ext_b.bang(poly_map(g, pa))))
      report.violation("g(!alpha) != !'g(alpha) at " + ka);
    for (const auto& [kb, pb] : a.polys)
      if (!(poly_map(g, ext_a.app(pa, pb)) == ext_b.app(poly_map(g, pa), poly_map(g, pb))))
        report.violation("g(alpha*beta) != g(alpha)*'g(beta) at (" + ka + "," + kb + ")");
  }

  // I~'(t) = g(I~(t)) on the declared terms.
  for (const auto& t : a.term_universe)
    if (!(poly_map(g, interp_poly(t, a.ts, ext_a)) == interp_poly(t, b.ts, ext_b)))
      report.violation("I~'(t) != g(I~(t)) at " + print(t));
  return report;
}

// ------------------------------------------------------------- proof algebra

namespace {

void collect_prop_atoms(const FormulaPtr& f, FormulaSet& atoms) {
  switch (f->kind) {
    case FormulaKind::Not: collect_prop_atoms(f->sub, atoms); return;
    case FormulaKind::Or:
      collect_prop_atoms(f->sub, atoms);
      collect_prop_atoms(f->sub2, atoms);
      return;
    case FormulaKind::Bottom: return;
    default: atoms.insert(f); return; // Prop, Just, Eq are opaque atoms
  }
}

bool eval_opaque(const FormulaPtr& f, const std::map<FormulaPtr, bool, FormulaLess>& val) {
  switch (f->kind) {
    case FormulaKind::Not: return !eval_opaque(f->sub, val);
    case FormulaKind::Or: return eval_opaque(f->sub, val) || eval_opaque(f->sub2, val);
    case FormulaKind::Bottom: return false;
    default: return val.at(f);
  }
}

} // namespace

std::string PropCanon::key() const {
  std::string out;
  for (const auto& a : atoms) out += print(a) + "\x1f";
  out += "#";
  for (bool b : table) out += b ? '1' : '0';
  return out;
}

PropCanon prop_canon(const FormulaPtr& f, std::size_t atom_cap) {
  FormulaSet atom_set;
  collect_prop_atoms(f, atom_set);
  std::vector<FormulaPtr> atoms(atom_set.begin(), atom_set.end());
  if (atoms.size() > atom_cap)
    throw BudgetError("prop_canon: " + std::to_string(atoms.size()) + " atoms exceed the cap");
  std::vector<bool> table(std::size_t{1} << atoms.size());
  std::map<FormulaPtr, bool, FormulaLess> val;
  for (std::size_t mask = 0; mask < table.size(); ++mask) {
    for (std::size_t i = 0; i < atoms.size(); ++i)
      val[atoms[i]] = (mask >> i) & 1;
    table[mask] = eval_opaque(f, val);
  }
  // Minimize support.
  bool changed = true;
  while (changed) {
    changed = false;
    for (std::size_t i = 0; i < atoms.size(); ++i) {
      std::size_t bit = std::size_t{1} << i;
      bool independent = true;
      for (std::size_t mask = 0; mask < table.size(); ++mask)
        if (!(mask & bit) && table[mask] != table[mask | bit]) {
          independent = false;
          break;
        }
      if (!independent) continue;
      std::vector<bool> reduced(table.size() / 2);
      for (std::size_t mask = 0, out = 0; mask < table.size(); ++mask)
        if (!(mask & bit)) reduced[out++] = table[mask];
      table = std::move(reduced);
      atoms.erase(atoms.begin() + static_cast<std::ptrdiff_t>(i));
      changed = true;
      break;
    }
  }
  PropCanon out;
  out.atoms = std::move(atoms);
  out.table = std::move(table);
  return out;
}

bool classically_valid(const FormulaPtr& f) {
  PropCanon c = prop_canon(f);
  for (bool b : c.table)
    if (!b) return false;
  return true;
}

bool classically_equal(const FormulaPtr& a, const FormulaPtr& b) {
  return prop_canon(a).key() == prop_canon(b).key();
}

bool classically_implies(const FormulaPtr& a, const FormulaPtr& b) {
  return classically_valid(mk_imp(a, b));
}

PrAlgebra::PrAlgebra(System sys, ConstantSpec cs) : sys_(sys), cs_(std::move(cs)) {}

PrAlgebra::Id PrAlgebra::intern(const FormulaPtr& representative) {
  return intern_entry(representative, std::nullopt);
}

PrAlgebra::Id PrAlgebra::intern_entry(const FormulaPtr& representative,
                                      std::optional<Provenance> prov) {
  if (prov) {
    CheckReport r = check_proof(prov->proof, sys_, cs_, prov->hypotheses);
    if (!r.ok)
      throw InputError("recorded proof for " + print(representative) + " does not check: " +
                       r.first_failure->second);
    if (!equal(prov->proof.steps.back().formula, representative))
      throw InputError("recorded proof does not conclude " + print(representative));
  }
  std::string key = prop_canon(representative).key();
  auto it = index_.find(key);
  if (it != index_.end()) {
    if (prov && !entries_[it->second].prov) entries_[it->second].prov = std::move(prov);
    return it->second;
  }
  entries_.push_back({representative, std::move(prov)});
  Id id = entries_.size() - 1;
  index_.emplace(std::move(key), id);
  return id;
}

PrAlgebra::Id PrAlgebra::zero() { return intern(mk_bottom()); }
PrAlgebra::Id PrAlgebra::one() { return intern(mk_top()); }
PrAlgebra::Id PrAlgebra::neg(Id a) { return intern(mk_not(rep(a))); }
PrAlgebra::Id PrAlgebra::join(Id a, Id b) { return intern(mk_or(rep(a), rep(b))); }
PrAlgebra::Id PrAlgebra::meet(Id a, Id b) { return intern(mk_and(rep(a), rep(b))); }

PrAlgebra::Id PrAlgebra::app(Id a, Id b) {
  FormulaPtr lhs, rhs;
  if (match_imp(rep(a), lhs, rhs) && classically_equal(rep(b), lhs)) return intern(rhs);
  return zero();
}

PrAlgebra::Id PrAlgebra::bang(Id a) {
  const auto& prov = entries_.at(a).prov;
  if (!prov) throw InputError("!_Pr needs a recorded proof for " + print(rep(a)));

  // Fresh proof variables for the hypotheses, avoiding every variable
  // already occurring in the derivation.
  std::set<std::string> used;
  auto scan = [&used](const FormulaPtr& f) {
    for (const auto& t : terms_of(f)) {
      auto vs = vars_of(t);
      used.insert(vs.begin(), vs.end());
    }
  };
  for (const auto& h : prov->hypotheses) scan(h);
  for (const auto& s : prov->proof.steps) scan(s.formula);

  LiftBinding binding;
  std::size_t next = 1;
  for (std::size_t i = 0; i < prov->hypotheses.size(); ++i) {
    std::string name;
    do {
      name = "x" + std::to_string(next++);
    } while (used.count(name));
    used.insert(name);
    binding.vars[i] = name;
  }

  ConstantOracle oracle(cs_, /*strict=*/false);
  Internalized lifted = lift(prov->proof, sys_, cs_, prov->hypotheses, binding, oracle);
  cs_ = oracle.recorded(); // keep minted constants stable across calls

  // The result class is keyed by t(x):phi for the *recorded* conclusion
  // phi; distinct representatives of the same class may lift differently.
  Provenance next_prov{lifted.hypotheses, lifted.proof};
  return intern_entry(lifted.proof.steps.back().formula, std::move(next_prov));
}

bool PrAlgebra::leq(Id a, Id b) const {
  return classically_implies(rep(a), rep(b));
}

PrAlgebra build_pr_algebra(
    const std::vector<std::pair<FormulaPtr, std::optional<PrAlgebra::Provenance>>>& entries,
    System sys, const ConstantSpec& cs) {
  PrAlgebra alg(sys, cs);
  for (const auto& [f, prov] : entries) alg.intern_entry(f, prov);
  return alg;
}

} // namespace lpwb
