#include "lpwb/evidence.hpp"

#include <algorithm>
#include <functional>

namespace lpwb {

namespace {

void require_lp(const TermPtr& t) {
  if (!term_in_dialect(t, Dialect::LP))
    throw InputError("evidence semantics is defined for LP terms only: " + print(t));
}
void require_lp(const FormulaPtr& f) {
  if (!formula_in_dialect(f, Dialect::LP))
    throw InputError("evidence semantics is defined for LP formulas only: " + print(f));
}

class Evidence {
public:
  explicit Evidence(const BinaryModel& m) : model_(m) {
    for (const auto& [t, f] : m.seeds) {
      require_lp(t);
      require_lp(f);
      seeds_[t].insert(f);
    }
  }

  const FormulaSet& justified(const TermPtr& t) {
    auto it = memo_.find(t);
    if (it != memo_.end()) return it->second;
    FormulaSet out;
    auto seeded = seeds_.find(t);
    if (seeded != seeds_.end()) out = seeded->second;
    switch (t->kind) {
      case TermKind::Var:
        break; // empty unless seeded
      case TermKind::Const: {
        auto entry = model_.cs.entries.find(t->name);
        if (entry != model_.cs.entries.end())
          out.insert(entry->second.begin(), entry->second.end());
        if (model_.cs.total) {
          if (model_.window.empty())
            throw InputError("total-mode evidence query requires a finite window");
          for (const auto& f : model_.window)
            if (match_axiom(f, System::LP)) out.insert(f);
        }
        break;
      }
      case TermKind::App: {
        const FormulaSet& js = justified(t->left);
        const FormulaSet& jr = justified(t->right);
        for (const auto& f : js) {
          FormulaPtr a, b;
          if (match_imp(f, a, b) && jr.count(a)) out.insert(b);
        }
        break;
      }
      case TermKind::Sum: {
        const FormulaSet& js = justified(t->left);
        const FormulaSet& jr = justified(t->right);
        out.insert(js.begin(), js.end());
        out.insert(jr.begin(), jr.end());
        break;
      }
      case TermKind::Bang: {
        for (const auto& f : justified(t->left)) out.insert(mk_just(t->left, f));
        break;
      }
      default:
        throw InputError("evidence semantics is defined for LP terms only: " + print(t));
    }
    return memo_.emplace(t, std::move(out)).first->second;
  }

  int value(const FormulaPtr& f) {
    switch (f->kind) {
      case FormulaKind::Prop: return model_.value_of(f->name);
      case FormulaKind::Bottom: return 0;
      case FormulaKind::Not: return 1 - value(f->sub);
      case FormulaKind::Or: return std::max(value(f->sub), value(f->sub2));
      case FormulaKind::Just: return justified(f->term).count(f->sub) ? 1 : 0;
      default:
        throw InputError("evidence semantics is defined for LP formulas only: " + print(f));
    }
  }

  // E(t, phi) <= V(phi) for every t:phi in the given universe.
  std::optional<std::string> jt_violation(const FormulaSet& universe) {
    for (const auto& f : universe)
      if (f->kind == FormulaKind::Just && justified(f->term).count(f->sub) && value(f->sub) == 0)
        return "E(" + print(f->term) + ", " + print(f->sub) + ") = 1 but V = 0";
    return std::nullopt;
  }

private:
  const BinaryModel& model_;
  std::map<TermPtr, FormulaSet, TermLess> seeds_;
  std::map<TermPtr, FormulaSet, TermLess> memo_;
};

} // namespace

FormulaSet justified_set(const TermPtr& t, const BinaryModel& model) {
  require_lp(t);
  Evidence e(model);
  return e.justified(t);
}

int eval(const FormulaPtr& f, const BinaryModel& model) {
  require_lp(f);
  Evidence e(model);
  if (auto bad = e.jt_violation(subformulas(f)))
    throw ModelError("seeded model violates jT: " + *bad);
  return e.value(f);
}

std::optional<BinaryModel> refute(const FormulaPtr& f, const ConstantSpec& cs,
                                  const std::vector<std::pair<TermPtr, FormulaPtr>>& seeds,
                                  const FormulaSet& window) {
  require_lp(f);
  std::set<std::string> prop_set = props_of(f);
  std::vector<std::string> props(prop_set.begin(), prop_set.end());
  FormulaSet universe = subformulas(f);
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << props.size()); ++mask) {
    BinaryModel m;
    m.cs = cs;
    m.seeds = seeds;
    m.window = window;
    for (std::size_t i = 0; i < props.size(); ++i)
      m.valuation[props[i]] = (mask >> i) & 1;
    Evidence e(m);
    if (e.jt_violation(universe)) continue; // not a legal model
    if (e.value(f) == 0) return m;
  }
  return std::nullopt;
}

Report verify_binary_algebra(const BinaryModel& model, const FormulaSet& formula_universe,
                             const TermSet& term_universe) {
  Report report;
  Evidence e(model);
  auto ev = [&](const TermPtr& t, const FormulaPtr& f) { return e.justified(t).count(f) ? 1 : 0; };

  for (const auto& s : term_universe) {
    for (const auto& r : term_universe) {
      for (const auto& phi : formula_universe) {
        // Al-Sum
        if (std::max(ev(s, phi), ev(r, phi)) > ev(mk_sum(s, r), phi))
          report.violation("Al-Sum at (" + print(s) + ", " + print(r) + ", " + print(phi) + ")");
        // Al-Appl, with the existential psi bounded by the universe
        for (const auto& psi : formula_universe)
          if (std::min(ev(s, mk_imp(phi, psi)), ev(r, phi)) > ev(mk_app(s, r), psi))
            report.violation("Al-Appl at (" + print(s) + ", " + print(r) + ", " + print(phi) +
                             " -> " + print(psi) + ")");
      }
    }
  }
  for (const auto& t : term_universe)
    for (const auto& phi : formula_universe)
      if (ev(t, phi) > ev(mk_bang(t), mk_just(t, phi)))
        report.violation("Al-j4 at (" + print(t) + ", " + print(phi) + ")");
  for (const auto& [c, fs] : model.cs.entries)
    for (const auto& phi : fs)
      if (ev(mk_const(c), phi) != 1)
        report.violation("Al-CS at (" + c + ", " + print(phi) + ")");
  if (model.cs.total)
    for (const auto& phi : model.window)
      if (match_axiom(phi, System::LP))
        for (const auto& t : term_universe)
          if (t->kind == TermKind::Const && ev(t, phi) != 1)
            report.violation("Al-CS (total) at (" + print(t) + ", " + print(phi) + ")");
  for (const auto& t : term_universe)
    for (const auto& phi : formula_universe)
      if (ev(t, phi) > e.value(phi))
        report.violation("Al-jT at (" + print(t) + ", " + print(phi) + ")");
  return report;
}

Report mkrtychev_roundtrip(const BinaryModel& model, const FormulaSet& universe) {
  Report report;
  Evidence e(model);

  // Freeze the evidence function on every t:psi under the universe.
  std::map<std::pair<TermPtr, FormulaPtr>, int,
           bool (*)(const std::pair<TermPtr, FormulaPtr>&, const std::pair<TermPtr, FormulaPtr>&)>
      table([](const std::pair<TermPtr, FormulaPtr>& a, const std::pair<TermPtr, FormulaPtr>& b) {
        if (int c = compare(*a.first, *b.first)) return c < 0;
        return compare(*a.second, *b.second) < 0;
      });
  FormulaSet closed;
  for (const auto& f : universe) {
    FormulaSet sub = subformulas(f);
    closed.insert(sub.begin(), sub.end());
  }
  for (const auto& f : closed)
    if (f->kind == FormulaKind::Just)
      table[{f->term, f->sub}] = e.justified(f->term).count(f->sub) ? 1 : 0;

  // Mkrtychev side: V-recursion against the frozen table.
  std::function<int(const FormulaPtr&)> mk_value = [&](const FormulaPtr& f) -> int {
    switch (f->kind) {
      case FormulaKind::Prop: return model.value_of(f->name);
      case FormulaKind::Bottom: return 0;
      case FormulaKind::Not: return 1 - mk_value(f->sub);
      case FormulaKind::Or: return std::max(mk_value(f->sub), mk_value(f->sub2));
      case FormulaKind::Just: return table.at({f->term, f->sub});
      default: throw InputError("LP formulas only: " + print(f));
    }
  };

  for (const auto& f : universe) {
    int lhs = mk_value(f);
    int rhs = e.value(f);
    if (lhs != rhs)
      report.violation("V(" + print(f) + ") = " + std::to_string(lhs) + " but assignment gives " +
                       std::to_string(rhs));
  }
  return report;
}

} // namespace lpwb
