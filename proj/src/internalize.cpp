#include "lpwb/internalize.hpp"

#include <cstdint>
#include <cstdio>

namespace lpwb {

void LiftBinding::validate(std::size_t hypothesis_count) const {
  std::set<std::string> seen;
  for (std::size_t i = 0; i < hypothesis_count; ++i) {
    auto it = vars.find(i);
    if (it == vars.end())
      throw InputError("lift binding misses hypothesis " + std::to_string(i + 1));
    if (!is_identifier(it->second) || !is_variable_name(it->second))
      throw InputError("'" + it->second + "' is not a proof variable name");
    if (!seen.insert(it->second).second)
      throw InputError("lift binding reuses variable " + it->second);
  }
}

ConstantOracle::ConstantOracle(ConstantSpec cs, bool strict) : cs_(std::move(cs)), strict_(strict) {}

namespace {

std::string stable_constant_name(const std::string& printed) {
  // FNV-1a, fixed 64-bit; reproducible across runs and platforms.
  std::uint64_t h = 1469598103934665603ull;
  for (unsigned char c : printed) {
    h ^= c;
    h *= 1099511628211ull;
  }
  char buf[20];
  std::snprintf(buf, sizeof buf, "k_%012llx", static_cast<unsigned long long>(h & 0xffffffffffffull));
  return buf;
}

} // namespace

std::string ConstantOracle::choose(const FormulaPtr& axiom_instance, System sys) {
  for (const auto& [name, fs] : cs_.entries) // map order = smallest name first
    if (fs.count(axiom_instance)) return name;
  if (!cs_.total && strict_)
    throw InputError("constant specification has no constant for axiom instance " +
                     print(axiom_instance));
  if (!match_axiom(axiom_instance, sys))
    throw InputError("not an axiom instance: " + print(axiom_instance));
  std::string name = stable_constant_name(print(axiom_instance));
  cs_.add(name, axiom_instance);
  return name;
}

namespace {

class Compiler {
public:
  Compiler(const Proof& input, System sys, ConstantOracle& oracle,
           const std::vector<FormulaPtr>& hypotheses, const LiftBinding& binding)
      : input_(input), sys_(sys), oracle_(oracle), hypotheses_(hypotheses), binding_(binding) {}

  Internalized run() {
    Internalized out;
    auto [term, last] = compile(input_.steps.size() - 1);
    (void)last;
    out.term = term;
    out.proof.steps = std::move(steps_);
    for (std::size_t i = 0; i < hypotheses_.size(); ++i)
      out.hypotheses.push_back(mk_just(mk_var(binding_.vars.at(i)), hypotheses_[i]));
    return out;
  }

private:
  const Proof& input_;
  System sys_;
  ConstantOracle& oracle_;
  const std::vector<FormulaPtr>& hypotheses_;
  const LiftBinding& binding_;

  std::vector<ProofStep> steps_;
  std::map<std::size_t, std::pair<TermPtr, std::size_t>> memo_; // input step -> (term, output step)
  std::map<std::size_t, std::size_t> copied_;                   // input step -> output step

  std::size_t emit(FormulaPtr f, Justification j) {
    steps_.push_back({std::move(f), std::move(j)});
    return steps_.size() - 1;
  }

  // Replays an input sub-derivation verbatim (needed below an Int step,
  // whose premise must be present as a formula, not as a justified one).
  std::size_t copy_original(std::size_t k) {
    auto it = copied_.find(k);
    if (it != copied_.end()) return it->second;
    const auto& [f, just] = input_.steps[k];
    Justification j = just;
    switch (just.kind) {
      case Justification::Kind::MP:
        j.premise = copy_original(just.premise);
        j.impl = copy_original(just.impl);
        break;
      case Justification::Kind::JReg:
      case Justification::Kind::Int:
        j.premise = copy_original(just.premise);
        break;
      default: break;
    }
    std::size_t out = emit(f, j);
    copied_.emplace(k, out);
    return out;
  }

  std::pair<TermPtr, std::size_t> compile(std::size_t k) {
    auto it = memo_.find(k);
    if (it != memo_.end()) return it->second;
    const auto& [f, just] = input_.steps[k];
    std::pair<TermPtr, std::size_t> result;
    switch (just.kind) {
      case Justification::Kind::Axiom: {
        std::string c = oracle_.choose(f, sys_);
        TermPtr t = mk_const(c);
        result = {t, emit(mk_just(t, f), Justification::cs())};
        break;
      }
      case Justification::Kind::CSMember: {
        // f is c:psi in CS; derive !c:c:psi via j4.
        TermPtr bang = mk_bang(f->term);
        FormulaPtr target = mk_just(bang, f);
        std::size_t base = emit(f, Justification::cs());
        std::size_t j4 = emit(mk_imp(f, target), Justification::axiom("j4"));
        result = {bang, emit(target, Justification::mp(base, j4))};
        break;
      }
      case Justification::Kind::Hypothesis: {
        TermPtr x = mk_var(binding_.vars.at(just.hyp));
        result = {x, emit(mk_just(x, f), Justification::hypothesis(just.hyp))};
        break;
      }
      case Justification::Kind::MP: {
        const FormulaPtr& prem = input_.steps[just.premise].formula;
        const FormulaPtr& impl = input_.steps[just.impl].formula;
        auto [s, prem_step] = compile(just.premise);
        auto [r, impl_step] = compile(just.impl);
        if (equal(impl, mk_imp(prem, f))) {
          TermPtr t = mk_app(r, s);
          result = {t, emit(mk_just(t, f), Justification::mp(prem_step, impl_step))};
          break;
        }
        // Term-level MP: f = (u*w):psi from w:phi and u:(phi -> psi).
        // Route it through the Appl axiom the derived rule abbreviates.
        FormulaPtr appl = mk_imp(impl, mk_imp(prem, f));
        std::string d = oracle_.choose(appl, sys_);
        TermPtr dt = mk_const(d);
        std::size_t appl_step = emit(mk_just(dt, appl), Justification::cs());
        TermPtr half = mk_app(dt, r);
        std::size_t half_step =
            emit(mk_just(half, mk_imp(prem, f)), Justification::mp(impl_step, appl_step));
        TermPtr t = mk_app(half, s);
        result = {t, emit(mk_just(t, f), Justification::mp(prem_step, half_step))};
        break;
      }
      case Justification::Kind::Int: {
        // f is 1:psi; replay psi's derivation, re-conclude f by Int,
        // then j4 gives !1:1:psi.
        std::size_t psi = copy_original(just.premise);
        std::size_t base = emit(f, Justification::intro(psi));
        TermPtr bang = mk_bang(mk_one());
        FormulaPtr target = mk_just(bang, f);
        std::size_t j4 = emit(mk_imp(f, target), Justification::axiom("j4"));
        result = {bang, emit(target, Justification::mp(base, j4))};
        break;
      }
      case Justification::Kind::JReg:
        throw InputError("internalization does not cover jreg steps");
    }
    memo_.emplace(k, result);
    return result;
  }
};

void require_checked(const Proof& proof, System sys, const ConstantSpec& cs,
                     const std::vector<FormulaPtr>& hypotheses) {
  if (proof.steps.empty()) throw InputError("cannot internalize an empty proof");
  CheckReport r = check_proof(proof, sys, cs, hypotheses);
  if (!r.ok)
    throw InputError("input proof does not check: step " +
                     std::to_string(r.first_failure->first + 1) + ": " + r.first_failure->second);
}

} // namespace

Internalized internalize(const Proof& proof, System sys, const ConstantSpec& cs,
                         ConstantOracle& oracle) {
  static const std::vector<FormulaPtr> no_hypotheses;
  static const LiftBinding no_binding;
  require_checked(proof, sys, cs, no_hypotheses);
  Compiler c(proof, sys, oracle, no_hypotheses, no_binding);
  return c.run();
}

Internalized lift(const Proof& proof, System sys, const ConstantSpec& cs,
                  const std::vector<FormulaPtr>& hypotheses, const LiftBinding& binding,
                  ConstantOracle& oracle) {
  binding.validate(hypotheses.size());
  require_checked(proof, sys, cs, hypotheses);
  Compiler c(proof, sys, oracle, hypotheses, binding);
  return c.run();
}

Proof universal_internalize(const FormulaPtr& phi, const Proof& witness, const ConstantSpec& cs) {
  require_checked(witness, System::LPB, cs, {});
  if (!equal(witness.steps.back().formula, phi))
    throw InputError("witness does not conclude the requested formula");
  Proof out = witness;
  out.steps.push_back({mk_just(mk_one(), phi), Justification::intro(witness.steps.size() - 1)});
  return out;
}

} // namespace lpwb
