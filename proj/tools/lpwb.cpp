#include <CLI11.hpp>
#include <json.hpp>

#include <cctype>
#include <iostream>
#include <random>
#include <sstream>

#include "lpwb/evidence.hpp"
#include "lpwb/fileio.hpp"
#include "lpwb/finitealg.hpp"
#include "lpwb/internalize.hpp"
#include "lpwb/lpbalg.hpp"
#include "lpwb/termbool.hpp"

// Exit codes: 0 success/valid/equal, 1 refuted/unequal/violation found,
// 2 usage or input error.
namespace {

using json = nlohmann::json;
using namespace lpwb;

struct CommonOpts {
  std::string cs_path;
  bool total = false;
  std::string window_path;
  std::string seed_path;
  bool use_json = false;
  bool strict = false;
  std::string system = "lp";
  std::size_t budget = 1u << 16;
  std::size_t depth = 0;
  std::uint64_t seed_rng = 0;
};

System parse_system(const std::string& name) {
  auto sys = system_from_name(name);
  if (!sys) throw InputError("unknown system '" + name + "' (expected lp, hlp or lpb)");
  return *sys;
}

ConstantSpec load_cs(const CommonOpts& o, System sys) {
  ConstantSpec cs;
  if (!o.cs_path.empty()) cs = parse_cs_file(read_file(o.cs_path), sys);
  if (o.total) cs.total = true;
  return cs;
}

void emit_report(const Report& r, bool use_json, const std::string& what) {
  if (use_json) {
    json out;
    out["check"] = what;
    out["ok"] = r.ok();
    out["violations"] = r.violations;
    out["notes"] = r.notes;
    out["truncated"] = r.truncated;
    std::cout << out.dump(2) << "\n";
    return;
  }
  for (const auto& n : r.notes) std::cout << "note: " << n << "\n";
  for (const auto& v : r.violations) std::cout << "violation: " << v << "\n";
  std::cout << what << ": " << (r.ok() ? "ok" : "FAILED") << "\n";
}

int run_parse(const CommonOpts& o, const std::string& kind, const std::string& text) {
  Dialect d = system_dialect(parse_system(o.system));
  json out;
  if (kind == "term") {
    TermPtr t = parse_term(text, d);
    out["kind"] = "term";
    out["printed"] = print(t);
    out["size"] = term_size(t);
  } else {
    FormulaPtr f = parse_formula(text, d);
    out["kind"] = "formula";
    out["printed"] = print(f);
    out["size"] = formula_size(f);
    out["atoms"] = props_of(f);
  }
  if (o.use_json) std::cout << out.dump(2) << "\n";
  else std::cout << out["printed"].get<std::string>() << "\n";
  return 0;
}

int run_check(const CommonOpts& o, const std::string& path) {
  ProofFile pf = parse_proof_file(read_file(path));
  ConstantSpec cs = load_cs(o, pf.system);
  CheckReport r = check_proof(pf.proof, pf.system, cs, pf.hypotheses);
  if (o.use_json) {
    json out;
    out["ok"] = r.ok;
    out["system"] = system_name(pf.system);
    out["steps"] = r.per_step;
    out["warnings"] = r.warnings;
    if (r.first_failure) {
      out["first_failure"]["step"] = r.first_failure->first + 1;
      out["first_failure"]["reason"] = r.first_failure->second;
    }
    std::cout << out.dump(2) << "\n";
  } else {
    for (std::size_t i = 0; i < r.per_step.size(); ++i)
      std::cout << (i + 1) << ". " << print(pf.proof.steps[i].formula) << "  [" << r.per_step[i]
                << "]\n";
    for (const auto& w : r.warnings) std::cout << "warning: " << w << "\n";
    std::cout << (r.ok ? "ok" : "FAILED") << "\n";
  }
  return r.ok ? 0 : 1;
}

int run_internalize(const CommonOpts& o, const std::string& path, const std::string& out_path,
                    const std::string& bind) {
  ProofFile pf = parse_proof_file(read_file(path));
  ConstantSpec cs = load_cs(o, pf.system);
  ConstantOracle oracle(cs, o.strict);
  Internalized out;
  if (pf.hypotheses.empty() && bind.empty()) {
    out = internalize(pf.proof, pf.system, cs, oracle);
  } else {
    LiftBinding binding;
    if (bind.empty()) {
      for (std::size_t i = 0; i < pf.hypotheses.size(); ++i)
        binding.vars[i] = "x" + std::to_string(i + 1);
    } else {
      std::istringstream in(bind);
      std::string name;
      std::size_t i = 0;
      while (std::getline(in, name, ',')) binding.vars[i++] = name;
    }
    out = lift(pf.proof, pf.system, cs, pf.hypotheses, binding, oracle);
  }
  std::string text = format_proof_file(pf.system, out.hypotheses, out.proof);
  if (!out_path.empty()) write_file(out_path, text);
  if (o.use_json) {
    json j;
    j["term"] = print(out.term);
    j["conclusion"] = print(out.proof.steps.back().formula);
    j["steps"] = out.proof.steps.size();
    j["proof"] = text;
    j["cs"] = format_cs_file(oracle.recorded());
    std::cout << j.dump(2) << "\n";
  } else {
    std::cout << "term: " << print(out.term) << "\n";
    if (out_path.empty()) std::cout << text;
  }
  // The emitted derivation must re-check; treat anything else as a defect.
  CheckReport r = check_proof(out.proof, pf.system, oracle.recorded(), out.hypotheses);
  return r.ok ? 0 : 1;
}

int run_termeq(const CommonOpts& o, std::vector<std::string> terms, std::size_t fuzz) {
  if (fuzz > 0) {
    std::mt19937_64 rng(o.seed_rng);
    auto random_term = [&rng](auto&& self, std::size_t size) -> TermPtr {
      static const char* leaves[] = {"x", "y", "z", "a", "b"};
      if (size <= 1) {
        std::size_t i = rng() % 6;
        return i < 5 ? (is_variable_name(leaves[i]) ? mk_var(leaves[i]) : mk_const(leaves[i]))
                     : mk_zero();
      }
      switch (rng() % 5) {
        case 0: return mk_neg(self(self, size - 1));
        case 1: return mk_bang(self(self, size - 1));
        case 2: {
          std::size_t l = 1 + rng() % (size - 1);
          return mk_sum(self(self, l), self(self, size - l));
        }
        case 3: {
          std::size_t l = 1 + rng() % (size - 1);
          return mk_app(self(self, l), self(self, size - l));
        }
        default: return self(self, 1);
      }
    };
    std::size_t bad = 0;
    for (std::size_t i = 0; i < fuzz; ++i) {
      TermPtr s = random_term(random_term, 1 + rng() % 8);
      TermPtr t = random_term(random_term, 1 + rng() % 8);
      if (term_equal(s, t) != brute_force_equal(s, t)) {
        ++bad;
        std::cout << "oracle disagreement: " << print(s) << "  vs  " << print(t) << "\n";
      }
      if (!term_equal(mk_sum(s, t), mk_sum(t, s)) || !term_equal(mk_sum(s, mk_neg(s)), mk_one())) {
        ++bad;
        std::cout << "axiom sweep failure at " << print(s) << ", " << print(t) << "\n";
      }
    }
    std::cout << "fuzz: " << fuzz << " rounds, " << bad << " failures\n";
    return bad == 0 ? 0 : 1;
  }
  if (terms.size() != 2) throw InputError("termeq expects two terms");
  TermPtr s = parse_term(terms[0], Dialect::LPB);
  TermPtr t = parse_term(terms[1], Dialect::LPB);
  bool eq = term_equal(s, t);
  if (o.use_json) {
    json j;
    j["equal"] = eq;
    j["lhs"] = canonical_form(s);
    j["rhs"] = canonical_form(t);
    j["leq"] = term_leq(s, t);
    std::cout << j.dump(2) << "\n";
  } else {
    std::cout << (eq ? "equal" : "not equal") << "\n";
  }
  return eq ? 0 : 1;
}

BinaryModel make_model(const CommonOpts& o) {
  BinaryModel m;
  m.cs = load_cs(o, System::LP);
  if (!o.window_path.empty()) m.window = parse_window_file(read_file(o.window_path), Dialect::LP);
  if (!o.seed_path.empty()) m.seeds = parse_seed_file(read_file(o.seed_path), Dialect::LP);
  return m;
}

int run_eval(const CommonOpts& o, const std::string& text, const std::string& val) {
  BinaryModel m = make_model(o);
  std::istringstream in(val);
  std::string part;
  while (std::getline(in, part, ',')) {
    std::size_t eq = part.find('=');
    if (eq == std::string::npos) throw InputError("--val expects p=0,q=1,...");
    m.valuation[part.substr(0, eq)] = std::stoi(part.substr(eq + 1));
  }
  FormulaPtr f = parse_formula(text, Dialect::LP);
  int v = eval(f, m);
  if (o.use_json) {
    json j;
    j["formula"] = print(f);
    j["value"] = v;
    std::cout << j.dump(2) << "\n";
  } else {
    std::cout << v << "\n";
  }
  return v == 1 ? 0 : 1;
}

int run_refute(const CommonOpts& o, const std::string& text) {
  BinaryModel m = make_model(o);
  FormulaPtr f = parse_formula(text, Dialect::LP);
  auto counter = refute(f, m.cs, m.seeds, m.window);
  if (o.use_json) {
    json j;
    j["formula"] = print(f);
    j["refuted"] = counter.has_value();
    if (counter) {
      json valj;
      for (const auto& [p, v] : counter->valuation) valj[p] = v;
      j["valuation"] = valj;
      json ev;
      for (const auto& g : subformulas(f))
        if (g->kind == FormulaKind::Just)
          ev[print(g)] = justified_set(g->term, *counter).count(g->sub) ? 1 : 0;
      j["evidence"] = ev;
    }
    std::cout << j.dump(2) << "\n";
  } else if (counter) {
    std::cout << "countermodel found\n";
    for (const auto& [p, v] : counter->valuation) std::cout << "  " << p << " = " << v << "\n";
    for (const auto& g : subformulas(f))
      if (g->kind == FormulaKind::Just)
        std::cout << "  E(" << print(g->term) << ", " << print(g->sub)
                  << ") = " << (justified_set(g->term, *counter).count(g->sub) ? 1 : 0) << "\n";
  } else {
    std::cout << "no countermodel in the minimal-evidence family\n";
  }
  return counter ? 1 : 0;
}

int run_algebra_verify(const CommonOpts& o, const std::string& path) {
  AlgebraFile file = parse_algebra_file(read_file(path));
  switch (file.kind) {
    case AlgebraFile::Kind::FullLp: {
      Report r = verify_full_lp(*file.alg, file.box, file.cs, o.budget);
      emit_report(r, o.use_json, "full-lp");
      return r.ok() ? 0 : 1;
    }
    case AlgebraFile::Kind::Hlp:
    case AlgebraFile::Kind::Regular: {
      bool regular = file.kind == AlgebraFile::Kind::Regular;
      Report r = verify_hlp(*file.alg, file.ops, regular);
      emit_report(r, o.use_json, regular ? "regular" : "hlp");
      return r.ok() ? 0 : 1;
    }
    case AlgebraFile::Kind::Binary: {
      FormulaSet fu = file.box.formula_universe;
      std::vector<FormulaPtr> seeds(fu.begin(), fu.end());
      for (const auto& [c, fs] : file.model.cs.entries)
        for (const auto& g : fs) seeds.push_back(mk_just(mk_const(c), g));
      fu = closure_universe(seeds, o.depth);
      Report r = verify_binary_algebra(file.model, fu, file.box.term_universe);
      Report round = mkrtychev_roundtrip(file.model, fu);
      r.violations.insert(r.violations.end(), round.violations.begin(), round.violations.end());
      emit_report(r, o.use_json, "binary");
      return r.ok() ? 0 : 1;
    }
    case AlgebraFile::Kind::FullLpb: {
      Report r = verify_full_lpb(*file.lpb, file.cs, file.oracle, {o.budget});
      emit_report(r, o.use_json, "full-lpb");
      return r.ok() ? 0 : 1;
    }
    case AlgebraFile::Kind::PolyLpb: {
      Report r = verify_poly_lpb(*file.poly, extend_ops(file.poly->ts), file.cs, file.oracle,
                                 {o.budget});
      emit_report(r, o.use_json, "poly-lpb");
      return r.ok() ? 0 : 1;
    }
  }
  return 2;
}

int run_algebra_stone(const CommonOpts& o, const std::string& path, const std::string& out_path) {
  AlgebraFile file = parse_algebra_file(read_file(path));
  if (file.kind != AlgebraFile::Kind::FullLp)
    throw InputError("stone expects a full-lp algebra file");
  StoneResult s = stone(*file.alg);
  BoxTable image = transport(file.box, s.witness);
  Report r = verify_full_lp(s.algebra, image, file.cs, o.budget);

  // Eq-(1)-style check: the witness carries every box entry.
  for (const auto& [key, v] : file.box.entries)
    if (s.witness(v) != image.get(key.first, key.second))
      r.violation("transport mismatch at (" + print(key.first) + ", " + print(key.second) + ")");

  std::string image_text = format_full_lp_file(s.algebra, image, file.cs);
  if (!out_path.empty()) write_file(out_path, image_text);
  if (o.use_json) {
    json j;
    j["atoms"] = s.algebra.atoms();
    j["witness"] = format_witness_file(s.witness);
    j["image_ok"] = r.ok();
    j["violations"] = r.violations;
    if (out_path.empty()) j["image"] = image_text;
    std::cout << j.dump(2) << "\n";
  } else {
    std::cout << "atoms: " << s.algebra.atoms() << "\nwitness:\n" << format_witness_file(s.witness);
    emit_report(r, false, "stone image");
  }
  return r.ok() ? 0 : 1;
}

int run_algebra_bistone(const CommonOpts& o, const std::string& path, const std::string& out_path) {
  AlgebraFile file = parse_algebra_file(read_file(path));
  if (file.kind == AlgebraFile::Kind::FullLpb) {
    BiStoneResult out = bi_stone(*file.lpb);
    Report iso = verify_bi_isomorphism(*file.lpb, out.image, out.f, out.g);
    Report ver = verify_full_lpb(out.image, file.cs, file.oracle, {o.budget});
    iso.violations.insert(iso.violations.end(), ver.violations.begin(), ver.violations.end());
    std::string text = format_full_lpb_file(out.image, file.cs, file.oracle);
    if (!out_path.empty()) write_file(out_path, text);
    if (o.use_json) {
      json j;
      j["f"] = format_witness_file(out.f);
      j["g"] = format_witness_file(out.g);
      j["ok"] = iso.ok();
      j["violations"] = iso.violations;
      if (out_path.empty()) j["image"] = text;
      std::cout << j.dump(2) << "\n";
    } else {
      std::cout << "f:\n" << format_witness_file(out.f) << "g:\n" << format_witness_file(out.g);
      emit_report(iso, false, "bi-stone image");
    }
    return iso.ok() ? 0 : 1;
  }
  if (file.kind == AlgebraFile::Kind::PolyLpb) {
    BiStonePolyResult out = bi_stone_poly(*file.poly);
    PolyExt ea = extend_ops(file.poly->ts);
    PolyExt eb = extend_ops(out.image.ts);
    Report iso = verify_bi_isomorphism_poly(*file.poly, out.image, out.f, out.g, ea, eb);
    Report ver = verify_poly_lpb(out.image, eb, file.cs, file.oracle, {o.budget});
    iso.violations.insert(iso.violations.end(), ver.violations.begin(), ver.violations.end());
    std::string text = format_poly_lpb_file(out.image, file.cs, file.oracle);
    if (!out_path.empty()) write_file(out_path, text);
    if (o.use_json) {
      json j;
      j["f"] = format_witness_file(out.f);
      j["g"] = format_witness_file(out.g);
      j["ok"] = iso.ok();
      j["violations"] = iso.violations;
      if (out_path.empty()) j["image"] = text;
      std::cout << j.dump(2) << "\n";
    } else {
      std::cout << "f:\n" << format_witness_file(out.f) << "g:\n" << format_witness_file(out.g);
      emit_report(iso, false, "bi-stone image");
    }
    return iso.ok() ? 0 : 1;
  }
  throw InputError("bistone expects a full-lpb or poly-lpb algebra file");
}

int run_algebra_transport(const CommonOpts& o, const std::string& path,
                          const std::string& witness_path, const std::string& out_path) {
  AlgebraFile file = parse_algebra_file(read_file(path));
  if (file.kind != AlgebraFile::Kind::FullLp)
    throw InputError("transport expects a full-lp algebra file");
  IsoWitness w = parse_witness_file(read_file(witness_path));
  if (w.forward.size() != file.alg->size())
    throw InputError("witness size does not match the carrier");
  BoxTable image = transport(file.box, w);
  unsigned atoms = 0;
  while ((std::size_t{1} << atoms) < file.alg->size()) ++atoms;
  BoolAlg target = BoolAlg::powerset(atoms);
  Report r = verify_full_lp(target, image, file.cs, o.budget);
  std::string text = format_full_lp_file(target, image, file.cs);
  if (!out_path.empty()) write_file(out_path, text);
  else std::cout << text;
  emit_report(r, o.use_json, "transported image");
  return r.ok() ? 0 : 1;
}

int run_pralg(const CommonOpts& o, const std::string& path, long bang_index) {
  System sys = parse_system(o.system);
  ConstantSpec cs = load_cs(o, sys);
  if (!o.total && o.cs_path.empty()) cs.total = true; // bang needs constants for axioms

  std::vector<std::pair<FormulaPtr, std::optional<PrAlgebra::Provenance>>> entries;
  for (const auto& raw : [&] {
         std::vector<std::string> lines;
         std::istringstream in(read_file(path));
         std::string line;
         while (std::getline(in, line)) {
           auto hash = line.find('#');
           if (hash != std::string::npos) line.erase(hash);
           while (!line.empty() && std::isspace(static_cast<unsigned char>(line.back())))
             line.pop_back();
           if (!line.empty()) lines.push_back(line);
         }
         return lines;
       }()) {
    if (raw.rfind("formula:", 0) == 0) {
      entries.emplace_back(parse_formula(raw.substr(8), system_dialect(sys)), std::nullopt);
    } else if (raw.rfind("proof:", 0) == 0) {
      std::string p = raw.substr(6);
      while (!p.empty() && p.front() == ' ') p.erase(p.begin());
      // Relative proof paths are resolved against the entries file.
      if (!p.empty() && p.front() != '/') {
        std::size_t slash = path.find_last_of('/');
        if (slash != std::string::npos) p = path.substr(0, slash + 1) + p;
      }
      ProofFile pf = parse_proof_file(read_file(p));
      PrAlgebra::Provenance prov{pf.hypotheses, pf.proof};
      entries.emplace_back(pf.proof.steps.back().formula, std::move(prov));
    } else {
      throw InputError("pralg entries are 'formula: <f>' or 'proof: <path>' lines");
    }
  }

  PrAlgebra alg = build_pr_algebra(entries, sys, cs);
  json j;
  j["elements"] = json::array();
  for (std::size_t i = 0; i < alg.size(); ++i) {
    json e;
    e["id"] = i;
    e["representative"] = print(alg.rep(i));
    e["has_proof"] = alg.provenance(i).has_value();
    j["elements"].push_back(e);
  }

  // Boolean-law spot check over the interned elements.
  std::size_t violations = 0;
  for (std::size_t a = 0; a < alg.size(); ++a) {
    if (alg.join(a, alg.zero()) != a) ++violations;
    if (alg.meet(a, alg.one()) != a) ++violations;
    if (alg.join(a, alg.neg(a)) != alg.one()) ++violations;
    for (std::size_t b = 0; b < alg.size(); ++b) {
      if (alg.join(a, b) != alg.join(b, a)) ++violations;
      if (alg.meet(a, b) != alg.meet(b, a)) ++violations;
    }
  }
  j["law_violations"] = violations;

  if (bang_index >= 0) {
    auto id = static_cast<std::size_t>(bang_index);
    if (id >= alg.size()) throw InputError("--bang index out of range");
    auto lifted = alg.bang(id);
    j["bang"]["of"] = print(alg.rep(id));
    j["bang"]["result"] = print(alg.rep(lifted));
    const auto& prov = alg.provenance(lifted);
    j["bang"]["proof"] = format_proof_file(sys, prov->hypotheses, prov->proof);
  }

  if (o.use_json) {
    std::cout << j.dump(2) << "\n";
  } else {
    for (const auto& e : j["elements"])
      std::cout << "[" << e["id"].get<std::size_t>() << "] "
                << e["representative"].get<std::string>()
                << (e["has_proof"].get<bool>() ? "  (proof recorded)" : "") << "\n";
    std::cout << "boolean law violations: " << violations << "\n";
    if (j.contains("bang"))
      std::cout << "bang: " << j["bang"]["result"].get<std::string>() << "\n"
                << j["bang"]["proof"].get<std::string>();
  }
  return violations == 0 ? 0 : 1;
}

} // namespace

int main(int argc, char** argv) {
  CLI::App app{"lpwb - workbench for the logic of proofs and its Boolean-term extension"};
  app.require_subcommand(1);
  CommonOpts o;
  int rc = 0;

  auto add_common = [&o](CLI::App* cmd) {
    cmd->add_option("--cs", o.cs_path, "constant specification file");
    cmd->add_flag("--total", o.total, "total constant specification");
    cmd->add_option("--window", o.window_path, "finite window file for total mode");
    cmd->add_option("--seed", o.seed_path, "evidence seed file (term :: formula lines)");
    cmd->add_flag("--json", o.use_json, "structured output");
    cmd->add_flag("--strict", o.strict, "never mint constants");
    cmd->add_option("--system", o.system, "system: lp, hlp or lpb");
    cmd->add_option("--budget", o.budget, "cap for exhaustive sweeps");
    cmd->add_option("--depth", o.depth, "closure depth for generated universes");
    cmd->add_option("--seed-rng", o.seed_rng, "seed for randomized sweeps");
  };

  std::string text, kind = "formula", path, out_path, witness_path, bind, val;
  std::vector<std::string> terms;
  std::size_t fuzz = 0;
  long bang_index = -1;

  CLI::App* parse = app.add_subcommand("parse", "parse a term or formula and reprint it");
  parse->add_option("text", text)->required();
  parse->add_option("--as", kind, "term or formula")->check(CLI::IsMember({"term", "formula"}));
  add_common(parse);
  parse->callback([&] { rc = run_parse(o, kind, text); });

  CLI::App* check = app.add_subcommand("check", "check a Hilbert derivation");
  check->add_option("proof", path)->required();
  add_common(check);
  check->callback([&] { rc = run_check(o, path); });

  CLI::App* internalize_cmd =
      app.add_subcommand("internalize", "compile a checked derivation into a proof term");
  internalize_cmd->add_option("proof", path)->required();
  internalize_cmd->add_option("--out", out_path, "write the certified proof here");
  add_common(internalize_cmd);
  internalize_cmd->callback([&] { rc = run_internalize(o, path, out_path, ""); });

  CLI::App* lift_cmd = app.add_subcommand("lift", "lift a derivation from hypotheses");
  lift_cmd->add_option("proof", path)->required();
  lift_cmd->add_option("--bind", bind, "comma-separated proof variables for the hypotheses");
  lift_cmd->add_option("--out", out_path, "write the lifted proof here");
  add_common(lift_cmd);
  lift_cmd->callback([&] { rc = run_internalize(o, path, out_path, bind); });

  CLI::App* termeq = app.add_subcommand("termeq", "decide LPB term equality");
  termeq->add_option("terms", terms, "two LPB terms");
  termeq->add_option("--fuzz", fuzz, "random equality sweep instead of a single pair");
  add_common(termeq);
  termeq->callback([&] { rc = run_termeq(o, terms, fuzz); });

  CLI::App* eval_cmd = app.add_subcommand("eval", "evaluate in the minimal binary model");
  eval_cmd->add_option("formula", text)->required();
  eval_cmd->add_option("--val", val, "propositional valuation p=1,q=0,...");
  add_common(eval_cmd);
  eval_cmd->callback([&] { rc = run_eval(o, text, val); });

  CLI::App* refute_cmd = app.add_subcommand("refute", "search for a falsifying minimal model");
  refute_cmd->add_option("formula", text)->required();
  add_common(refute_cmd);
  refute_cmd->callback([&] { rc = run_refute(o, text); });

  CLI::App* algebra = app.add_subcommand("algebra", "finite algebra operations");
  algebra->require_subcommand(1);
  CLI::App* verify = algebra->add_subcommand("verify", "check the declared conditions");
  verify->add_option("file", path)->required();
  add_common(verify);
  verify->callback([&] { rc = run_algebra_verify(o, path); });
  CLI::App* stone_cmd = algebra->add_subcommand("stone", "Stone representation plus transport");
  stone_cmd->add_option("file", path)->required();
  stone_cmd->add_option("--out", out_path);
  add_common(stone_cmd);
  stone_cmd->callback([&] { rc = run_algebra_stone(o, path, out_path); });
  CLI::App* bistone_cmd = algebra->add_subcommand("bistone", "bi-Stone representation");
  bistone_cmd->add_option("file", path)->required();
  bistone_cmd->add_option("--out", out_path);
  add_common(bistone_cmd);
  bistone_cmd->callback([&] { rc = run_algebra_bistone(o, path, out_path); });
  CLI::App* transport_cmd = algebra->add_subcommand("transport", "transport a box table");
  transport_cmd->add_option("file", path)->required();
  transport_cmd->add_option("--witness", witness_path)->required();
  transport_cmd->add_option("--out", out_path);
  add_common(transport_cmd);
  transport_cmd->callback([&] { rc = run_algebra_transport(o, path, witness_path, out_path); });

  CLI::App* pralg = app.add_subcommand("pralg", "build the proof algebra from entries");
  pralg->add_option("entries", path)->required();
  pralg->add_option("--bang", bang_index, "apply the bang operator to this element id");
  add_common(pralg);
  pralg->callback([&] { rc = run_pralg(o, path, bang_index); });

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return rc;
}
