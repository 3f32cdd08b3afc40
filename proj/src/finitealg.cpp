#include "lpwb/finitealg.hpp"

#include <algorithm>
#include <cstdio>

namespace lpwb {

BoolAlg BoolAlg::powerset(unsigned atoms) {
  if (atoms > 16) throw InputError("powerset algebras support at most 16 atoms");
  BoolAlg a;
  a.powerset_ = true;
  a.atoms_ = atoms;
  a.size_ = std::size_t{1} << atoms;
  a.zero_ = 0;
  a.one_ = a.size_ - 1;
  return a;
}

BoolAlg BoolAlg::from_tables(std::size_t size, Elem zero, std::vector<Elem> neg,
                             std::vector<std::vector<Elem>> join) {
  if (auto bad = boolean_law_violation(size, zero, neg, join))
    throw InputError("not a Boolean algebra: " + *bad);
  BoolAlg a;
  a.powerset_ = false;
  a.size_ = size;
  a.zero_ = zero;
  a.neg_ = std::move(neg);
  a.join_ = std::move(join);
  a.one_ = a.neg_[zero];
  unsigned atoms = 0;
  while ((std::size_t{1} << atoms) < size) ++atoms;
  a.atoms_ = atoms;
  return a;
}

Elem BoolAlg::neg(Elem a) const {
  if (powerset_) return ~a & one_;
  return neg_[a];
}

Elem BoolAlg::join(Elem a, Elem b) const {
  if (powerset_) return a | b;
  return join_[a][b];
}

std::string BoolAlg::show(Elem a) const {
  char buf[20];
  std::snprintf(buf, sizeof buf, "%llx", static_cast<unsigned long long>(a));
  return buf;
}

std::optional<std::string> boolean_law_violation(std::size_t size, Elem zero,
                                                 const std::vector<Elem>& neg,
                                                 const std::vector<std::vector<Elem>>& join) {
  if (size == 0) return "empty carrier";
  if (zero >= size) return "zero outside carrier";
  if (neg.size() != size) return "neg table has wrong arity";
  if (join.size() != size) return "join table has wrong arity";
  for (const auto& row : join)
    if (row.size() != size) return "join table has a short row";
  for (Elem a = 0; a < size; ++a)
    if (neg[a] >= size) return "neg leaves the carrier";
  for (Elem a = 0; a < size; ++a)
    for (Elem b = 0; b < size; ++b)
      if (join[a][b] >= size) return "join leaves the carrier";

  Elem one = neg[zero];
  auto mt = [&](Elem a, Elem b) { return neg[join[neg[a]][neg[b]]]; };
  auto name = [](Elem a) { return std::to_string(a); };

  for (Elem a = 0; a < size; ++a) {
    if (join[a][zero] != a) return "a + 0 != a at a=" + name(a);
    if (mt(a, one) != a) return "a * 1 != a at a=" + name(a);
    if (join[a][neg[a]] != one) return "a + -a != 1 at a=" + name(a);
    if (mt(a, neg[a]) != zero) return "a * -a != 0 at a=" + name(a);
    for (Elem b = 0; b < size; ++b) {
      if (join[a][b] != join[b][a]) return "join not commutative at (" + name(a) + "," + name(b) + ")";
      if (mt(a, b) != mt(b, a)) return "meet not commutative at (" + name(a) + "," + name(b) + ")";
      for (Elem c = 0; c < size; ++c) {
        if (join[a][join[b][c]] != join[join[a][b]][c])
          return "join not associative at (" + name(a) + "," + name(b) + "," + name(c) + ")";
        if (mt(a, mt(b, c)) != mt(mt(a, b), c))
          return "meet not associative at (" + name(a) + "," + name(b) + "," + name(c) + ")";
        if (mt(a, join[b][c]) != join[mt(a, b)][mt(a, c)])
          return "meet does not distribute over join at (" + name(a) + "," + name(b) + "," + name(c) + ")";
        if (join[a][mt(b, c)] != mt(join[a][b], join[a][c]))
          return "join does not distribute over meet at (" + name(a) + "," + name(b) + "," + name(c) + ")";
      }
    }
  }
  return std::nullopt;
}

IsoWitness IsoWitness::inverse() const {
  IsoWitness inv;
  inv.forward.assign(forward.size(), 0);
  for (Elem a = 0; a < forward.size(); ++a) inv.forward.at(forward[a]) = a;
  return inv;
}

StoneResult stone(const BoolAlg& a) {
  // Atoms: minimal nonzero elements.
  std::vector<Elem> atoms;
  for (Elem x = 0; x < a.size(); ++x) {
    if (x == a.zero()) continue;
    bool minimal = true;
    for (Elem y = 0; y < a.size(); ++y)
      if (y != a.zero() && y != x && a.leq(y, x)) { minimal = false; break; }
    if (minimal) atoms.push_back(x);
  }
  if ((std::size_t{1} << atoms.size()) != a.size())
    throw InputError("carrier size is not 2^atoms; tables do not form a Boolean algebra");

  StoneResult result{BoolAlg::powerset(static_cast<unsigned>(atoms.size())), {}};
  result.witness.forward.assign(a.size(), 0);
  for (Elem x = 0; x < a.size(); ++x) {
    Elem mask = 0;
    for (std::size_t i = 0; i < atoms.size(); ++i)
      if (a.leq(atoms[i], x)) mask |= Elem{1} << i;
    result.witness.forward[x] = mask;
  }

  // The atoms-below map must be a Boolean isomorphism; check exhaustively.
  const auto& f = result.witness.forward;
  std::vector<bool> hit(a.size(), false);
  for (Elem x = 0; x < a.size(); ++x) {
    if (hit[f[x]]) throw InputError("atoms-below map is not injective");
    hit[f[x]] = true;
  }
  if (f[a.zero()] != 0) throw InputError("atoms-below map does not preserve 0");
  for (Elem x = 0; x < a.size(); ++x) {
    if (f[a.neg(x)] != result.algebra.neg(f[x]))
      throw InputError("atoms-below map does not preserve complement");
    for (Elem y = 0; y < a.size(); ++y)
      if (f[a.join(x, y)] != (f[x] | f[y]))
        throw InputError("atoms-below map does not preserve join");
  }
  return result;
}

namespace {

bool pair_less(const std::pair<TermPtr, FormulaPtr>& a, const std::pair<TermPtr, FormulaPtr>& b) {
  if (int c = compare(*a.first, *b.first)) return c < 0;
  return compare(*a.second, *b.second) < 0;
}

} // namespace

BoxTable::BoxTable() : entries(pair_less) {}

Elem BoxTable::get(const TermPtr& t, const FormulaPtr& f) const {
  auto it = entries.find({t, f});
  return it == entries.end() ? 0 : it->second;
}

void BoxTable::set(const TermPtr& t, const FormulaPtr& f, Elem v) {
  entries[{t, f}] = v;
}

void validate_universes(const BoxTable& box) {
  for (const auto& f : box.formula_universe)
    for (const auto& g : subformulas(f))
      if (!box.formula_universe.count(g))
        throw InputError("formula universe not closed under subformulas: missing " + print(g));
  for (const auto& t : box.term_universe)
    for (const auto& s : subterms(t))
      if (!box.term_universe.count(s))
        throw InputError("term universe not closed under subterms: missing " + print(s));
}

namespace {

// Assignment extension: propositional atoms from theta,
// justified formulas straight from the table.
Elem assign(const BoolAlg& a, const BoxTable& box, const std::map<std::string, Elem>& theta,
            const FormulaPtr& f) {
  switch (f->kind) {
    case FormulaKind::Prop: {
      auto it = theta.find(f->name);
      return it == theta.end() ? a.zero() : it->second;
    }
    case FormulaKind::Bottom: return a.zero();
    case FormulaKind::Not: return a.neg(assign(a, box, theta, f->sub));
    case FormulaKind::Or:
      return a.join(assign(a, box, theta, f->sub), assign(a, box, theta, f->sub2));
    case FormulaKind::Just: {
      auto it = box.entries.find({f->term, f->sub});
      return it == box.entries.end() ? a.zero() : it->second;
    }
    default:
      throw InputError("LP formulas only in full-LP verification: " + print(f));
  }
}

std::string where(const TermPtr& t, const FormulaPtr& f) {
  return "(" + print(t) + ", " + print(f) + ")";
}

} // namespace

Report verify_full_lp(const BoolAlg& a, const BoxTable& box, const ConstantSpec& cs,
                      std::size_t valuation_budget) {
  validate_universes(box);
  for (const auto& [key, v] : box.entries)
    if (v >= a.size())
      throw InputError("box value " + a.show(v) + " outside the carrier at (" +
                       print(key.first) + ", " + print(key.second) + ")");
  Report report;

  // Absent entries denote the algebra's zero element (which is not the
  // element labeled 0 in a table-backed carrier).
  auto bx = [&](const TermPtr& t, const FormulaPtr& f) -> Elem {
    auto it = box.entries.find({t, f});
    return it == box.entries.end() ? a.zero() : it->second;
  };

  for (const auto& u : box.term_universe) {
    if (u->kind == TermKind::App) {
      for (const auto& chi : box.formula_universe) {
        FormulaPtr phi, psi;
        if (!match_imp(chi, phi, psi)) continue;
        if (!a.leq(a.meet(bx(u->left, chi), bx(u->right, phi)), bx(u, psi)))
          report.violation("Al-Appl at (" + print(u->left) + ", " + print(u->right) + ", " +
                           print(chi) + ")");
      }
    }
    if (u->kind == TermKind::Sum) {
      for (const auto& phi : box.formula_universe)
        if (!a.leq(a.join(bx(u->left, phi), bx(u->right, phi)), bx(u, phi)))
          report.violation("Al-Sum at (" + print(u->left) + ", " + print(u->right) + ", " +
                           print(phi) + ")");
    }
    if (u->kind == TermKind::Bang) {
      for (const auto& phi : box.formula_universe) {
        FormulaPtr wrapped = mk_just(u->left, phi);
        if (!box.formula_universe.count(wrapped)) continue;
        if (!a.leq(bx(u->left, phi), bx(u, wrapped)))
          report.violation("Al-j4 at " + where(u->left, phi));
      }
    }
  }

  for (const auto& [c, fs] : cs.entries) {
    TermPtr ct = mk_const(c);
    if (!box.term_universe.count(ct)) continue;
    for (const auto& phi : fs) {
      if (!box.formula_universe.count(phi)) continue;
      if (bx(ct, phi) != a.one()) report.violation("Al-CS at " + where(ct, phi));
    }
  }
  if (cs.total) {
    for (const auto& t : box.term_universe) {
      if (t->kind != TermKind::Const) continue;
      for (const auto& phi : box.formula_universe)
        if (match_axiom(phi, System::LP) && bx(t, phi) != a.one())
          report.violation("Al-CS (total) at " + where(t, phi));
    }
  }

  // Al-jT over all valuations of the universe's propositional atoms.
  std::set<std::string> prop_set;
  for (const auto& f : box.formula_universe) {
    auto ps = props_of(f);
    prop_set.insert(ps.begin(), ps.end());
  }
  std::vector<std::string> props(prop_set.begin(), prop_set.end());

  std::size_t space = 1;
  bool overflow = false;
  for (std::size_t i = 0; i < props.size() && !overflow; ++i) {
    if (space > (std::size_t{1} << 40) / a.size()) overflow = true;
    else space *= a.size();
  }
  std::size_t count = (overflow || space > valuation_budget) ? valuation_budget : space;
  if (overflow || space > valuation_budget) {
    report.truncated = true;
    report.notes.push_back("Al-jT valuation space (" + std::to_string(a.size()) + "^" +
                           std::to_string(props.size()) + ") truncated to the first " +
                           std::to_string(valuation_budget) + " valuations");
  }

  std::map<std::string, Elem> theta;
  for (std::size_t n = 0; n < count; ++n) {
    std::size_t code = n;
    for (const auto& p : props) {
      theta[p] = static_cast<Elem>(code % a.size());
      code /= a.size();
    }
    for (const auto& t : box.term_universe) {
      for (const auto& phi : box.formula_universe) {
        Elem b = bx(t, phi);
        if (b == a.zero()) continue;
        if (!a.leq(b, assign(a, box, theta, phi))) {
          std::string v;
          for (const auto& p : props) v += " " + p + "=" + a.show(theta[p]);
          report.violation("Al-jT at " + where(t, phi) + " under valuation" + v);
        }
      }
    }
  }
  return report;
}

Report verify_hlp(const BoolAlg& a, const OpTables& ops, bool regular_only) {
  Report report;
  for (const auto& [t, table] : ops) {
    if (table.size() != a.size())
      throw InputError("operator table for " + print(t) + " has wrong arity");
    for (Elem v : table)
      if (v >= a.size())
        throw InputError("operator table for " + print(t) + " leaves the carrier");
  }
  auto op = [&](const TermPtr& t) { return ops.find(t); };

  for (const auto& [u, table] : ops) {
    if (u->kind == TermKind::App) {
      auto s = op(u->left), t = op(u->right);
      if (s == ops.end() || t == ops.end()) continue;
      for (Elem x = 0; x < a.size(); ++x)
        for (Elem y = 0; y < a.size(); ++y)
          if (!a.leq(a.meet(s->second[a.imp(x, y)], t->second[x]), table[y]))
            report.violation("A-Appl at (" + print(u->left) + ", " + print(u->right) + ", a=" +
                             a.show(x) + ", b=" + a.show(y) + ")");
    }
    if (u->kind == TermKind::Sum) {
      auto s = op(u->left), t = op(u->right);
      if (s == ops.end() || t == ops.end()) continue;
      for (Elem x = 0; x < a.size(); ++x)
        if (!a.leq(a.join(s->second[x], t->second[x]), table[x]))
          report.violation("A-Sum at (" + print(u->left) + ", " + print(u->right) + ", a=" +
                           a.show(x) + ")");
    }
    if (!regular_only && u->kind == TermKind::Bang) {
      auto t = op(u->left);
      if (t == ops.end()) continue;
      for (Elem x = 0; x < a.size(); ++x)
        if (!a.leq(t->second[x], table[t->second[x]]))
          report.violation("A-j4 at (" + print(u->left) + ", a=" + a.show(x) + ")");
    }
  }
  if (!regular_only) {
    for (const auto& [t, table] : ops)
      for (Elem x = 0; x < a.size(); ++x)
        if (!a.leq(table[x], x))
          report.violation("A-jT at (" + print(t) + ", a=" + a.show(x) + ")");
  }
  return report;
}

BoxTable transport(const BoxTable& box, const IsoWitness& witness) {
  BoxTable out;
  out.term_universe = box.term_universe;
  out.formula_universe = box.formula_universe;
  for (const auto& [key, v] : box.entries) out.entries[key] = witness(v);
  return out;
}

BoxTable box_from_binary(const BinaryModel& model, const FormulaSet& formula_universe,
                         const TermSet& term_universe) {
  BoxTable out;
  out.formula_universe = formula_universe;
  out.term_universe = term_universe;
  for (const auto& t : term_universe) {
    FormulaSet j = justified_set(t, model);
    for (const auto& f : formula_universe)
      if (j.count(f)) out.set(t, f, 1);
  }
  return out;
}

} // namespace lpwb
