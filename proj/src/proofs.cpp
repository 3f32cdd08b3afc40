#include "lpwb/proofs.hpp"

#include <algorithm>

namespace lpwb {

Dialect system_dialect(System sys) {
  return sys == System::LPB ? Dialect::LPB : Dialect::LP;
}

std::string system_name(System sys) {
  switch (sys) {
    case System::LP: return "lp";
    case System::HLP: return "hlp";
    case System::LPB: return "lpb";
  }
  return "?";
}

std::optional<System> system_from_name(const std::string& name) {
  if (name == "lp") return System::LP;
  if (name == "hlp") return System::HLP;
  if (name == "lpb") return System::LPB;
  return std::nullopt;
}

bool ConstantSpec::has_entry(const std::string& c, const FormulaPtr& f) const {
  auto it = entries.find(c);
  return it != entries.end() && it->second.count(f) > 0;
}

void ConstantSpec::add(const std::string& c, FormulaPtr f) {
  entries[c].insert(std::move(f));
}

std::size_t ConstantSpec::entry_count() const {
  std::size_t n = 0;
  for (const auto& [c, fs] : entries) n += fs.size();
  return n;
}

namespace {

// Patterns are ordinary ASTs whose metavariables are marked atoms:
// Prop "$phi" stands for any formula, Var "$s" for any term.
bool is_fmeta(const Formula& f) { return f.kind == FormulaKind::Prop && f.name[0] == '$'; }
bool is_tmeta(const Term& t) { return t.kind == TermKind::Var && t.name[0] == '$'; }

struct Binding {
  std::map<std::string, FormulaPtr> formulas;
  std::map<std::string, TermPtr> terms;
};

bool match_term(const TermPtr& pat, const TermPtr& tgt, Binding& b) {
  if (is_tmeta(*pat)) {
    auto [it, fresh] = b.terms.emplace(pat->name, tgt);
    return fresh || equal(it->second, tgt);
  }
  if (pat->kind != tgt->kind || pat->name != tgt->name) return false;
  if (pat->left && !match_term(pat->left, tgt->left, b)) return false;
  if (pat->right && !match_term(pat->right, tgt->right, b)) return false;
  return true;
}

bool match_formula(const FormulaPtr& pat, const FormulaPtr& tgt, Binding& b) {
  if (is_fmeta(*pat)) {
    auto [it, fresh] = b.formulas.emplace(pat->name, tgt);
    return fresh || equal(it->second, tgt);
  }
  if (pat->kind != tgt->kind || pat->name != tgt->name) return false;
  if (pat->term && !match_term(pat->term, tgt->term, b)) return false;
  if (pat->term2 && !match_term(pat->term2, tgt->term2, b)) return false;
  if (pat->sub && !match_formula(pat->sub, tgt->sub, b)) return false;
  if (pat->sub2 && !match_formula(pat->sub2, tgt->sub2, b)) return false;
  return true;
}

struct Scheme {
  std::string id;
  bool lpb_only;
  std::vector<FormulaPtr> patterns; // alternatives (the two columns of B1-B5)
};

const std::vector<Scheme>& scheme_table() {
  static const std::vector<Scheme> table = [] {
    FormulaPtr phi = mk_prop("$phi"), psi = mk_prop("$psi"), chi = mk_prop("$chi");
    TermPtr s = mk_var("$s"), t = mk_var("$t"), u = mk_var("$u");
    std::vector<Scheme> v;
    v.push_back({"PL1", false, {mk_imp(phi, mk_or(phi, psi))}});
    v.push_back({"PL2", false, {mk_imp(mk_or(phi, psi), mk_or(psi, phi))}});
    v.push_back({"PL3", false, {mk_imp(mk_or(phi, phi), phi)}});
    v.push_back({"PL4", false, {mk_imp(mk_imp(phi, psi), mk_imp(mk_or(chi, phi), mk_or(chi, psi)))}});
    v.push_back({"PL5", false, {mk_imp(mk_bottom(), phi)}});
    v.push_back({"Appl", false,
                 {mk_imp(mk_just(s, mk_imp(phi, psi)),
                         mk_imp(mk_just(t, phi), mk_just(mk_app(s, t), psi)))}});
    v.push_back({"Sum", false,
                 {mk_imp(mk_or(mk_just(s, phi), mk_just(t, phi)), mk_just(mk_sum(s, t), phi))}});
    v.push_back({"jT", false, {mk_imp(mk_just(t, phi), phi)}});
    v.push_back({"j4", false, {mk_imp(mk_just(t, phi), mk_just(mk_bang(t), mk_just(t, phi)))}});
    // Boolean term axioms, join column then meet column.
    v.push_back({"B1", true,
                 {mk_eq(mk_sum(s, t), mk_sum(t, s)), mk_eq(mk_meet(s, t), mk_meet(t, s))}});
    v.push_back({"B2", true,
                 {mk_eq(mk_sum(s, mk_sum(t, u)), mk_sum(mk_sum(s, t), u)),
                  mk_eq(mk_meet(s, mk_meet(t, u)), mk_meet(mk_meet(s, t), u))}});
    v.push_back({"B3", true,
                 {mk_eq(mk_sum(s, mk_zero()), s), mk_eq(mk_meet(s, mk_one()), s)}});
    v.push_back({"B4", true,
                 {mk_eq(mk_sum(s, mk_neg(s)), mk_one()), mk_eq(mk_meet(s, mk_neg(s)), mk_zero())}});
    v.push_back({"B5", true,
                 {mk_eq(mk_sum(s, mk_meet(t, u)), mk_meet(mk_sum(s, t), mk_sum(s, u))),
                  mk_eq(mk_meet(s, mk_sum(t, u)), mk_sum(mk_meet(s, t), mk_meet(s, u)))}});
    v.push_back({"Eq1", true, {mk_eq(t, t)}});
    v.push_back({"Eq2", true, {}}); // needs a context search, handled separately
    return v;
  }();
  return table;
}

// phi[x/s] vs phi[x/t]: the two formulas may differ only at term positions
// where the first has s and the second has t (any subset of occurrences).
bool subst_diff_term(const TermPtr& a, const TermPtr& b, const TermPtr& s, const TermPtr& t);

bool subst_diff_formula(const FormulaPtr& a, const FormulaPtr& b, const TermPtr& s,
                        const TermPtr& t) {
  if (equal(a, b)) return true;
  if (a->kind != b->kind || a->name != b->name) return false;
  if (a->term && !subst_diff_term(a->term, b->term, s, t)) return false;
  if (a->term2 && !subst_diff_term(a->term2, b->term2, s, t)) return false;
  if (a->sub && !subst_diff_formula(a->sub, b->sub, s, t)) return false;
  if (a->sub2 && !subst_diff_formula(a->sub2, b->sub2, s, t)) return false;
  return true;
}

bool subst_diff_term(const TermPtr& a, const TermPtr& b, const TermPtr& s, const TermPtr& t) {
  if (equal(a, b)) return true;
  if (equal(a, s) && equal(b, t)) return true;
  if (a->kind != b->kind || a->name != b->name) return false;
  if (a->left && !subst_diff_term(a->left, b->left, s, t)) return false;
  if (a->right && !subst_diff_term(a->right, b->right, s, t)) return false;
  return true;
}

// Eq2: s = t & phi[x/s] -> phi[x/t], desugared.
std::optional<AxiomMatch> match_eq2(const FormulaPtr& f) {
  Binding b;
  FormulaPtr skeleton =
      mk_imp(mk_and(mk_eq(mk_var("$s"), mk_var("$t")), mk_prop("$a")), mk_prop("$b"));
  if (!match_formula(skeleton, f, b)) return std::nullopt;
  const TermPtr& s = b.terms.at("$s");
  const TermPtr& t = b.terms.at("$t");
  const FormulaPtr& lhs = b.formulas.at("$a");
  const FormulaPtr& rhs = b.formulas.at("$b");
  if (!subst_diff_formula(lhs, rhs, s, t)) return std::nullopt;
  AxiomMatch m;
  m.scheme = "Eq2";
  m.substitution = {{"s", print(s)}, {"t", print(t)}, {"phi[x/s]", print(lhs)}, {"phi[x/t]", print(rhs)}};
  return m;
}

std::optional<AxiomMatch> try_scheme(const Scheme& sc, const FormulaPtr& f) {
  if (sc.id == "Eq2") return match_eq2(f);
  for (const auto& pat : sc.patterns) {
    Binding b;
    if (!match_formula(pat, f, b)) continue;
    AxiomMatch m;
    m.scheme = sc.id;
    for (const auto& [k, g] : b.formulas) m.substitution.emplace_back(k.substr(1), print(g));
    for (const auto& [k, t] : b.terms) m.substitution.emplace_back(k.substr(1), print(t));
    return m;
  }
  return std::nullopt;
}

} // namespace

std::optional<AxiomMatch> match_axiom(const FormulaPtr& f, System sys) {
  for (const auto& sc : scheme_table()) {
    if (sc.lpb_only && sys != System::LPB) continue;
    if (auto m = try_scheme(sc, f)) return m;
  }
  return std::nullopt;
}

std::optional<AxiomMatch> match_scheme(const std::string& scheme, const FormulaPtr& f, System sys) {
  for (const auto& sc : scheme_table()) {
    if (sc.id != scheme) continue;
    if (sc.lpb_only && sys != System::LPB) return std::nullopt;
    return try_scheme(sc, f);
  }
  return std::nullopt;
}

bool is_known_scheme(const std::string& scheme, System sys) {
  for (const auto& sc : scheme_table())
    if (sc.id == scheme) return !sc.lpb_only || sys == System::LPB;
  return false;
}

bool cs_member(const std::string& c, const FormulaPtr& f, const ConstantSpec& cs, System sys) {
  if (cs.has_entry(c, f)) return true;
  return cs.total && match_axiom(f, sys).has_value();
}

Justification Justification::axiom(std::string scheme) {
  Justification j;
  j.kind = Kind::Axiom;
  j.scheme = std::move(scheme);
  return j;
}
Justification Justification::cs() {
  Justification j;
  j.kind = Kind::CSMember;
  return j;
}
Justification Justification::hypothesis(std::size_t k) {
  Justification j;
  j.kind = Kind::Hypothesis;
  j.hyp = k;
  return j;
}
Justification Justification::mp(std::size_t premise, std::size_t impl) {
  Justification j;
  j.kind = Kind::MP;
  j.premise = premise;
  j.impl = impl;
  return j;
}
Justification Justification::jreg(std::size_t premise, TermPtr t) {
  Justification j;
  j.kind = Kind::JReg;
  j.premise = premise;
  j.term = std::move(t);
  return j;
}
Justification Justification::intro(std::size_t premise) {
  Justification j;
  j.kind = Kind::Int;
  j.premise = premise;
  return j;
}

namespace {

std::string describe(const AxiomMatch& m) {
  std::string out = m.scheme;
  if (!m.substitution.empty()) {
    out += " {";
    bool first = true;
    for (const auto& [k, v] : m.substitution) {
      if (!first) out += ", ";
      first = false;
      out += k + " := " + v;
    }
    out += "}";
  }
  return out;
}

} // namespace

CheckReport check_proof(const Proof& proof, System sys, const ConstantSpec& cs,
                        const std::vector<FormulaPtr>& hypotheses) {
  CheckReport report;
  report.per_step.reserve(proof.steps.size());
  Dialect d = system_dialect(sys);
  bool used_jreg = false;

  auto fail = [&](std::size_t k, std::string reason) {
    if (!report.first_failure) report.first_failure = {k, reason};
    report.per_step.push_back("FAIL: " + reason);
  };

  for (std::size_t k = 0; k < proof.steps.size(); ++k) {
    const auto& [f, just] = proof.steps[k];
    if (!formula_in_dialect(f, d)) {
      fail(k, "formula not in dialect of system " + system_name(sys));
      continue;
    }
    switch (just.kind) {
      case Justification::Kind::Axiom: {
        if (!is_known_scheme(just.scheme, sys)) {
          fail(k, "unknown axiom scheme '" + just.scheme + "' for system " + system_name(sys));
          break;
        }
        auto m = match_scheme(just.scheme, f, sys);
        if (!m) {
          fail(k, "formula is not an instance of scheme " + just.scheme);
          break;
        }
        report.per_step.push_back("axiom " + describe(*m));
        break;
      }
      case Justification::Kind::CSMember: {
        if (f->kind != FormulaKind::Just || f->term->kind != TermKind::Const) {
          fail(k, "cs step must have the form c:phi with c a constant");
          break;
        }
        if (!cs_member(f->term->name, f->sub, cs, sys)) {
          fail(k, "pair (" + f->term->name + ", " + print(f->sub) + ") not in constant specification");
          break;
        }
        report.per_step.push_back("cs " + f->term->name + " : " + print(f->sub));
        break;
      }
      case Justification::Kind::Hypothesis: {
        if (just.hyp >= hypotheses.size()) {
          fail(k, "hypothesis index out of range");
          break;
        }
        if (!equal(f, hypotheses[just.hyp])) {
          fail(k, "formula differs from hypothesis " + std::to_string(just.hyp + 1));
          break;
        }
        report.per_step.push_back("hyp " + std::to_string(just.hyp + 1));
        break;
      }
      case Justification::Kind::MP: {
        if (just.premise >= k || just.impl >= k) {
          fail(k, "mp references must point strictly backwards");
          break;
        }
        const FormulaPtr& prem = proof.steps[just.premise].formula;
        const FormulaPtr& impl = proof.steps[just.impl].formula;
        if (equal(impl, mk_imp(prem, f))) {
          report.per_step.push_back("mp " + std::to_string(just.premise + 1) + " " +
                                    std::to_string(just.impl + 1));
          break;
        }
        // Term-level modus ponens: from t:phi and s:(phi -> psi) infer
        // (s*t):psi (derivable via Appl and two plain MPs).
        bool ok = false;
        if (prem->kind == FormulaKind::Just && impl->kind == FormulaKind::Just &&
            f->kind == FormulaKind::Just) {
          FormulaPtr a, b;
          if (match_imp(impl->sub, a, b) && equal(a, prem->sub) && equal(b, f->sub) &&
              equal(f->term, mk_app(impl->term, prem->term)))
            ok = true;
        }
        if (!ok) {
          fail(k, "mp: step " + std::to_string(just.impl + 1) + " is not (step " +
                      std::to_string(just.premise + 1) + ") -> (step " + std::to_string(k + 1) +
                      "), nor the term-level form");
          break;
        }
        report.per_step.push_back("mp " + std::to_string(just.premise + 1) + " " +
                                  std::to_string(just.impl + 1) + " (term level)");
        break;
      }
      case Justification::Kind::JReg: {
        if (sys != System::HLP) {
          fail(k, "jreg is only available in system hlp");
          break;
        }
        if (just.premise >= k) {
          fail(k, "jreg reference must point strictly backwards");
          break;
        }
        used_jreg = true;
        FormulaPtr a, b;
        if (!match_iff(proof.steps[just.premise].formula, a, b)) {
          fail(k, "jreg premise is not an equivalence");
          break;
        }
        if (!equal(f, mk_iff(mk_just(just.term, a), mk_just(just.term, b)))) {
          fail(k, "jreg conclusion is not t:phi <-> t:psi for the given term");
          break;
        }
        report.per_step.push_back("jreg " + std::to_string(just.premise + 1) + " " + print(just.term));
        break;
      }
      case Justification::Kind::Int: {
        if (sys != System::LPB) {
          fail(k, "int is only available in system lpb");
          break;
        }
        if (!hypotheses.empty()) {
          fail(k, "int is only permitted in proofs without hypotheses");
          break;
        }
        if (just.premise >= k) {
          fail(k, "int reference must point strictly backwards");
          break;
        }
        if (!equal(f, mk_just(mk_one(), proof.steps[just.premise].formula))) {
          fail(k, "int conclusion must be 1:phi for phi at the referenced step");
          break;
        }
        report.per_step.push_back("int " + std::to_string(just.premise + 1));
        break;
      }
    }
  }

  if (sys == System::HLP && used_jreg && (cs.total || !cs.entries.empty()))
    report.warnings.push_back(
        "jreg combined with a nonempty constant specification; HLP is defined over the empty CS");

  report.ok = !report.first_failure.has_value();
  return report;
}

} // namespace lpwb
