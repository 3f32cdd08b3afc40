#include "lpwb/fileio.hpp"

#include <algorithm>
#include <cstdio>
#include <fstream>
#include <sstream>

namespace lpwb {

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw InputError("cannot open " + path);
  std::ostringstream out;
  out << in.rdbuf();
  return out.str();
}

void write_file(const std::string& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw InputError("cannot write " + path);
  out << text;
}

namespace {

std::string strip(const std::string& s) {
  std::size_t b = s.find_first_not_of(" \t\r\n");
  if (b == std::string::npos) return "";
  std::size_t e = s.find_last_not_of(" \t\r\n");
  return s.substr(b, e - b + 1);
}

// Comment-stripped, trimmed, nonempty lines.
std::vector<std::string> logical_lines(const std::string& text) {
  std::vector<std::string> out;
  std::istringstream in(text);
  std::string line;
  while (std::getline(in, line)) {
    std::size_t hash = line.find('#');
    if (hash != std::string::npos) line.erase(hash);
    line = strip(line);
    if (!line.empty()) out.push_back(line);
  }
  return out;
}

std::vector<std::string> split_ws(const std::string& s) {
  std::vector<std::string> out;
  std::istringstream in(s);
  std::string w;
  while (in >> w) out.push_back(w);
  return out;
}

Elem parse_elem(const std::string& s) {
  std::size_t pos = 0;
  unsigned long long v = 0;
  try {
    v = std::stoull(s, &pos, 16);
  } catch (const std::exception&) {
    throw InputError("expected a hex element value, got '" + s + "'");
  }
  if (pos != s.size()) throw InputError("expected a hex element value, got '" + s + "'");
  return v;
}

std::size_t parse_count(const std::string& s) {
  std::size_t pos = 0;
  unsigned long v = 0;
  try {
    v = std::stoul(s, &pos, 10);
  } catch (const std::exception&) {
    throw InputError("expected a decimal count, got '" + s + "'");
  }
  if (pos != s.size()) throw InputError("expected a decimal count, got '" + s + "'");
  return v;
}

} // namespace

ProofFile parse_proof_file(const std::string& text) {
  ProofFile out;
  bool have_system = false;
  std::map<long, std::size_t> label_to_index;

  auto resolve = [&](const std::string& token, std::size_t current) -> std::size_t {
    long label = 0;
    try {
      label = std::stol(token);
    } catch (const std::exception&) {
      throw InputError("step " + std::to_string(current + 1) + ": bad step reference '" + token + "'");
    }
    auto it = label_to_index.find(label);
    if (it == label_to_index.end())
      throw InputError("step " + std::to_string(current + 1) + ": reference to unknown step " + token);
    return it->second;
  };

  for (const auto& line : logical_lines(text)) {
    if (line.rfind("system:", 0) == 0) {
      auto sys = system_from_name(strip(line.substr(7)));
      if (!sys) throw InputError("unknown system '" + strip(line.substr(7)) + "'");
      out.system = *sys;
      have_system = true;
      continue;
    }
    if (!have_system) throw InputError("proof file must start with a 'system:' line");
    if (line.rfind("hyp:", 0) == 0) {
      out.hypotheses.push_back(parse_formula(strip(line.substr(4)), system_dialect(out.system)));
      continue;
    }
    // "N. <formula> ; <justification>"
    std::size_t dot = line.find('.');
    if (dot == std::string::npos) throw InputError("expected a numbered step: " + line);
    long label = 0;
    try {
      label = std::stol(line.substr(0, dot));
    } catch (const std::exception&) {
      throw InputError("expected a numbered step: " + line);
    }
    std::size_t semi = line.find(';', dot);
    if (semi == std::string::npos) throw InputError("step missing '; <justification>': " + line);
    FormulaPtr f = parse_formula(strip(line.substr(dot + 1, semi - dot - 1)),
                                 system_dialect(out.system));
    std::vector<std::string> just = split_ws(strip(line.substr(semi + 1)));
    if (just.empty()) throw InputError("empty justification: " + line);

    std::size_t k = out.proof.steps.size();
    Justification j = Justification::cs();
    const std::string& rule = just[0];
    if (rule == "axiom") {
      if (just.size() != 2) throw InputError("usage: axiom <scheme>: " + line);
      j = Justification::axiom(just[1]);
    } else if (rule == "cs") {
      if (just.size() != 1) throw InputError("usage: cs: " + line);
      j = Justification::cs();
    } else if (rule == "hyp") {
      if (just.size() != 2) throw InputError("usage: hyp <k>: " + line);
      long h = std::stol(just[1]);
      if (h < 1) throw InputError("hypothesis numbers are 1-based: " + line);
      j = Justification::hypothesis(static_cast<std::size_t>(h - 1));
    } else if (rule == "mp") {
      if (just.size() != 3) throw InputError("usage: mp <premise> <implication>: " + line);
      j = Justification::mp(resolve(just[1], k), resolve(just[2], k));
    } else if (rule == "jreg") {
      if (just.size() < 3) throw InputError("usage: jreg <premise> <term>: " + line);
      std::string term_text;
      for (std::size_t i = 2; i < just.size(); ++i) term_text += just[i] + " ";
      j = Justification::jreg(resolve(just[1], k),
                              parse_term(strip(term_text), system_dialect(out.system)));
    } else if (rule == "int") {
      if (just.size() != 2) throw InputError("usage: int <premise>: " + line);
      j = Justification::intro(resolve(just[1], k));
    } else {
      throw InputError("unknown justification '" + rule + "': " + line);
    }
    if (!label_to_index.emplace(label, k).second)
      throw InputError("duplicate step number " + std::to_string(label));
    out.proof.steps.push_back({f, j});
  }
  if (!have_system) throw InputError("proof file misses a 'system:' line");
  if (out.proof.steps.empty()) throw InputError("proof file has no steps");
  return out;
}

std::string format_proof_file(System sys, const std::vector<FormulaPtr>& hypotheses,
                              const Proof& proof) {
  std::ostringstream out;
  out << "system: " << system_name(sys) << "\n";
  for (const auto& h : hypotheses) out << "hyp: " << print(h) << "\n";
  for (std::size_t k = 0; k < proof.steps.size(); ++k) {
    const auto& [f, j] = proof.steps[k];
    out << (k + 1) << ". " << print(f) << " ; ";
    switch (j.kind) {
      case Justification::Kind::Axiom: out << "axiom " << j.scheme; break;
      case Justification::Kind::CSMember: out << "cs"; break;
      case Justification::Kind::Hypothesis: out << "hyp " << (j.hyp + 1); break;
      case Justification::Kind::MP: out << "mp " << (j.premise + 1) << " " << (j.impl + 1); break;
      case Justification::Kind::JReg:
        out << "jreg " << (j.premise + 1) << " " << print(j.term);
        break;
      case Justification::Kind::Int: out << "int " << (j.premise + 1); break;
    }
    out << "\n";
  }
  return out.str();
}

namespace {

void add_cs_line(ConstantSpec& cs, const std::string& line, System sys) {
  if (line == "total") {
    cs.total = true;
    return;
  }
  std::size_t colon = line.find(':');
  if (colon == std::string::npos) throw InputError("expected 'c : <formula>': " + line);
  std::string name = strip(line.substr(0, colon));
  if (!is_identifier(name) || is_variable_name(name))
    throw InputError("'" + name + "' is not a constant name");
  FormulaPtr f = parse_formula(strip(line.substr(colon + 1)), system_dialect(sys));
  // Accept scheme instances and, for the propositional part, arbitrary
  // classical tautologies.
  if (!match_axiom(f, sys) && !classically_valid(f))
    throw InputError("constant specification entry is neither an axiom instance nor a tautology: " +
                     print(f));
  cs.add(name, f);
}

} // namespace

ConstantSpec parse_cs_file(const std::string& text, System sys) {
  ConstantSpec cs;
  for (const auto& line : logical_lines(text)) add_cs_line(cs, line, sys);
  return cs;
}

std::string format_cs_file(const ConstantSpec& cs) {
  std::ostringstream out;
  if (cs.total) out << "total\n";
  for (const auto& [c, fs] : cs.entries)
    for (const auto& f : fs) out << c << " : " << print(f) << "\n";
  return out.str();
}

std::vector<std::pair<TermPtr, FormulaPtr>> parse_seed_file(const std::string& text, Dialect d) {
  std::vector<std::pair<TermPtr, FormulaPtr>> out;
  for (const auto& line : logical_lines(text)) {
    std::size_t sep = line.find("::");
    if (sep == std::string::npos) throw InputError("expected '<term> :: <formula>': " + line);
    out.emplace_back(parse_term(strip(line.substr(0, sep)), d),
                     parse_formula(strip(line.substr(sep + 2)), d));
  }
  return out;
}

FormulaSet parse_window_file(const std::string& text, Dialect d) {
  FormulaSet out;
  for (const auto& line : logical_lines(text)) out.insert(parse_formula(line, d));
  return out;
}

namespace {

struct Sections {
  // section name -> payload lines (an inline value becomes the first line)
  std::vector<std::pair<std::string, std::vector<std::string>>> list;

  const std::vector<std::string>* find(const std::string& name) const {
    for (const auto& [n, lines] : list)
      if (n == name) return &lines;
    return nullptr;
  }
  std::optional<std::string> single(const std::string& name) const {
    const auto* lines = find(name);
    if (!lines) return std::nullopt;
    if (lines->size() != 1) throw InputError("section '" + name + "' expects a single value");
    return (*lines)[0];
  }
};

const char* kSectionNames[] = {"kind",    "atoms",   "carrier", "zero",  "neg",     "join",
                               "terms",   "formulas", "box",     "op",    "cs",      "val",
                               "seed",    "window",  "termatoms", "termcarrier", "termzero",
                               "termneg", "termjoin", "app",     "bang",  "interp",  "oracle",
                               "termuniverse"};

Sections parse_sections(const std::string& text) {
  Sections out;
  std::string current;
  for (const auto& line : logical_lines(text)) {
    bool header = false;
    for (const char* name : kSectionNames) {
      std::string prefix = std::string(name) + ":";
      if (line.rfind(prefix, 0) == 0) {
        current = name;
        out.list.emplace_back(name, std::vector<std::string>{});
        std::string rest = strip(line.substr(prefix.size()));
        if (!rest.empty()) out.list.back().second.push_back(rest);
        header = true;
        break;
      }
    }
    if (header) continue;
    if (current.empty()) throw InputError("line outside any section: " + line);
    out.list.back().second.push_back(line);
  }
  return out;
}

std::vector<Elem> section_elems(const Sections& s, const std::string& name) {
  std::vector<Elem> out;
  const auto* lines = s.find(name);
  if (!lines) return out;
  for (const auto& line : *lines)
    for (const auto& tok : split_ws(line)) out.push_back(parse_elem(tok));
  return out;
}

BoolAlg parse_carrier(const Sections& s, const std::string& atoms_key,
                      const std::string& carrier_key, const std::string& zero_key,
                      const std::string& neg_key, const std::string& join_key) {
  if (auto n = s.single(atoms_key))
    return BoolAlg::powerset(static_cast<unsigned>(parse_count(*n)));
  auto m = s.single(carrier_key);
  if (!m) throw InputError("algebra file misses '" + atoms_key + "' or '" + carrier_key + "'");
  std::size_t size = parse_count(*m);
  auto zero = s.single(zero_key);
  if (!zero) throw InputError("table-backed carrier misses '" + zero_key + "'");
  std::vector<Elem> neg = section_elems(s, neg_key);
  std::vector<Elem> joins = section_elems(s, join_key);
  if (joins.size() != size * size)
    throw InputError("'" + join_key + "' must list " + std::to_string(size * size) + " entries");
  std::vector<std::vector<Elem>> join(size, std::vector<Elem>(size));
  for (std::size_t i = 0; i < size; ++i)
    for (std::size_t j = 0; j < size; ++j) join[i][j] = joins[i * size + j];
  return BoolAlg::from_tables(size, parse_elem(*zero), std::move(neg), std::move(join));
}

// "<key> | <formula> | <value>": first and last '|' are separators, the
// formula in the middle may itself contain '|'.
std::tuple<std::string, std::string, std::string> split_box_line(const std::string& line) {
  std::size_t first = line.find('|');
  std::size_t last = line.rfind('|');
  if (first == std::string::npos || last == first)
    throw InputError("expected '<key> | <formula> | <value>': " + line);
  return {strip(line.substr(0, first)), strip(line.substr(first + 1, last - first - 1)),
          strip(line.substr(last + 1))};
}

TermSet parse_terms_section(const Sections& s, const std::string& name, Dialect d) {
  TermSet out;
  if (const auto* lines = s.find(name))
    for (const auto& line : *lines) {
      TermPtr t = parse_term(line, d);
      TermSet sub = subterms(t);
      out.insert(sub.begin(), sub.end());
    }
  return out;
}

FormulaSet parse_formulas_section(const Sections& s, const std::string& name, Dialect d) {
  FormulaSet out;
  if (const auto* lines = s.find(name))
    for (const auto& line : *lines) {
      FormulaPtr f = parse_formula(line, d);
      FormulaSet sub = subformulas(f);
      out.insert(sub.begin(), sub.end());
    }
  return out;
}

// As listed, without the subformula closure (theorem oracles).
FormulaSet parse_formula_list(const Sections& s, const std::string& name, Dialect d) {
  FormulaSet out;
  if (const auto* lines = s.find(name))
    for (const auto& line : *lines) out.insert(parse_formula(line, d));
  return out;
}

TermStructure parse_term_structure(const Sections& s) {
  TermStructure ts;
  ts.carrier = parse_carrier(s, "termatoms", "termcarrier", "termzero", "termneg", "termjoin");
  std::size_t n = ts.carrier.size();
  std::vector<Elem> app = section_elems(s, "app");
  if (app.size() != n * n)
    throw InputError("'app' must list " + std::to_string(n * n) + " entries");
  ts.app.assign(n, std::vector<Elem>(n));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) ts.app[i][j] = app[i * n + j];
  ts.bang = section_elems(s, "bang");
  if (ts.bang.size() != n) throw InputError("'bang' must list " + std::to_string(n) + " entries");
  if (const auto* lines = s.find("interp"))
    for (const auto& line : *lines) {
      std::size_t eq = line.find('=');
      if (eq == std::string::npos) throw InputError("expected 'c = <hex>': " + line);
      std::string name = strip(line.substr(0, eq));
      if (!is_identifier(name) || is_variable_name(name))
        throw InputError("'" + name + "' is not a constant name");
      ts.interp[name] = parse_elem(strip(line.substr(eq + 1)));
    }
  ts.validate();
  return ts;
}

} // namespace

AlgebraFile parse_algebra_file(const std::string& text) {
  Sections s = parse_sections(text);
  AlgebraFile out;
  auto kind = s.single("kind");
  if (!kind) throw InputError("algebra file misses 'kind:'");
  if (*kind == "full-lp") out.kind = AlgebraFile::Kind::FullLp;
  else if (*kind == "hlp") out.kind = AlgebraFile::Kind::Hlp;
  else if (*kind == "regular") out.kind = AlgebraFile::Kind::Regular;
  else if (*kind == "binary") out.kind = AlgebraFile::Kind::Binary;
  else if (*kind == "full-lpb") out.kind = AlgebraFile::Kind::FullLpb;
  else if (*kind == "poly-lpb") out.kind = AlgebraFile::Kind::PolyLpb;
  else throw InputError("unknown algebra kind '" + *kind + "'");

  if (const auto* lines = s.find("cs")) {
    System sys = (out.kind == AlgebraFile::Kind::FullLpb || out.kind == AlgebraFile::Kind::PolyLpb)
                     ? System::LPB
                     : System::LP;
    for (const auto& line : *lines) add_cs_line(out.cs, line, sys);
  }

  switch (out.kind) {
    case AlgebraFile::Kind::FullLp: {
      out.alg = parse_carrier(s, "atoms", "carrier", "zero", "neg", "join");
      out.box.term_universe = parse_terms_section(s, "terms", Dialect::LP);
      out.box.formula_universe = parse_formulas_section(s, "formulas", Dialect::LP);
      if (const auto* lines = s.find("box"))
        for (const auto& line : *lines) {
          auto [key, formula, value] = split_box_line(line);
          out.box.set(parse_term(key, Dialect::LP), parse_formula(formula, Dialect::LP),
                      parse_elem(value));
        }
      break;
    }
    case AlgebraFile::Kind::Hlp:
    case AlgebraFile::Kind::Regular: {
      out.alg = parse_carrier(s, "atoms", "carrier", "zero", "neg", "join");
      if (const auto* lines = s.find("op"))
        for (const auto& line : *lines) {
          std::size_t bar = line.find('|');
          if (bar == std::string::npos) throw InputError("expected '<term> | <values>': " + line);
          TermPtr t = parse_term(strip(line.substr(0, bar)), Dialect::LP);
          std::vector<Elem> table;
          for (const auto& tok : split_ws(line.substr(bar + 1))) table.push_back(parse_elem(tok));
          if (table.size() != out.alg->size())
            throw InputError("operator table for " + print(t) + " must list " +
                             std::to_string(out.alg->size()) + " values");
          out.ops[t] = std::move(table);
        }
      break;
    }
    case AlgebraFile::Kind::Binary: {
      out.model.cs = out.cs;
      if (const auto* lines = s.find("seed"))
        for (const auto& line : *lines) {
          std::size_t sep = line.find("::");
          if (sep == std::string::npos) throw InputError("expected '<term> :: <formula>': " + line);
          out.model.seeds.emplace_back(parse_term(strip(line.substr(0, sep)), Dialect::LP),
                                       parse_formula(strip(line.substr(sep + 2)), Dialect::LP));
        }
      if (const auto* lines = s.find("val"))
        for (const auto& line : *lines) {
          std::size_t eq = line.find('=');
          if (eq == std::string::npos) throw InputError("expected 'p = 0|1': " + line);
          out.model.valuation[strip(line.substr(0, eq))] =
              static_cast<int>(parse_elem(strip(line.substr(eq + 1))));
        }
      out.model.window = parse_formulas_section(s, "window", Dialect::LP);
      out.box.term_universe = parse_terms_section(s, "terms", Dialect::LP);
      out.box.formula_universe = parse_formulas_section(s, "formulas", Dialect::LP);
      break;
    }
    case AlgebraFile::Kind::FullLpb: {
      LpbAlgebra alg;
      alg.formula_alg = parse_carrier(s, "atoms", "carrier", "zero", "neg", "join");
      alg.ts = parse_term_structure(s);
      alg.formula_universe = parse_formulas_section(s, "formulas", Dialect::LPB);
      if (const auto* lines = s.find("box"))
        for (const auto& line : *lines) {
          auto [key, formula, value] = split_box_line(line);
          alg.box_set(parse_elem(key), parse_formula(formula, Dialect::LPB), parse_elem(value));
        }
      out.oracle = parse_formula_list(s, "oracle", Dialect::LPB);
      out.lpb = std::move(alg);
      break;
    }
    case AlgebraFile::Kind::PolyLpb: {
      PolyLpbAlgebra alg;
      alg.formula_alg = parse_carrier(s, "atoms", "carrier", "zero", "neg", "join");
      alg.ts = parse_term_structure(s);
      alg.formula_universe = parse_formulas_section(s, "formulas", Dialect::LPB);
      alg.term_universe = parse_terms_section(s, "termuniverse", Dialect::LPB);
      // Polynomial keys are term expressions; constants e<hex> denote
      // carrier elements directly.
      TermStructure keyed = alg.ts;
      PolyExt ext = extend_ops(keyed);
      auto interp_key = [&keyed, &ext](const TermPtr& t) {
        TermStructure local = keyed;
        for (const auto& c : consts_of(t))
          if (!local.interp.count(c) && c.size() > 1 && c[0] == 'e')
            local.interp[c] = parse_elem(c.substr(1));
        return interp_poly(t, local, ext);
      };
      if (const auto* lines = s.find("box"))
        for (const auto& line : *lines) {
          auto [key, formula, value] = split_box_line(line);
          alg.box_declare(interp_key(parse_term(key, Dialect::LPB)),
                          parse_formula(formula, Dialect::LPB), parse_elem(value));
        }
      out.oracle = parse_formula_list(s, "oracle", Dialect::LPB);
      out.poly = std::move(alg);
      break;
    }
  }
  return out;
}

namespace {

void emit_carrier(std::ostringstream& out, const BoolAlg& a, const std::string& atoms_key,
                  const std::string& carrier_key, const std::string& zero_key,
                  const std::string& neg_key, const std::string& join_key) {
  if (a.is_powerset()) {
    out << atoms_key << ": " << a.atoms() << "\n";
    return;
  }
  out << carrier_key << ": " << a.size() << "\n";
  out << zero_key << ": " << a.show(a.zero()) << "\n";
  out << neg_key << ":";
  for (Elem x = 0; x < a.size(); ++x) out << " " << a.show(a.neg(x));
  out << "\n" << join_key << ":\n";
  for (Elem x = 0; x < a.size(); ++x) {
    out << " ";
    for (Elem y = 0; y < a.size(); ++y) out << " " << a.show(a.join(x, y));
    out << "\n";
  }
}

void emit_cs(std::ostringstream& out, const ConstantSpec& cs) {
  if (!cs.total && cs.entries.empty()) return;
  out << "cs:\n";
  if (cs.total) out << "  total\n";
  for (const auto& [c, fs] : cs.entries)
    for (const auto& f : fs) out << "  " << c << " : " << print(f) << "\n";
}

void emit_term_structure(std::ostringstream& out, const TermStructure& ts) {
  emit_carrier(out, ts.carrier, "termatoms", "termcarrier", "termzero", "termneg", "termjoin");
  out << "app:\n";
  for (const auto& row : ts.app) {
    out << " ";
    for (Elem v : row) out << " " << ts.carrier.show(v);
    out << "\n";
  }
  out << "bang:";
  for (Elem v : ts.bang) out << " " << ts.carrier.show(v);
  out << "\n";
  if (!ts.interp.empty()) {
    out << "interp:\n";
    for (const auto& [c, v] : ts.interp) out << "  " << c << " = " << ts.carrier.show(v) << "\n";
  }
}

void emit_formulas(std::ostringstream& out, const std::string& name, const FormulaSet& fs) {
  if (fs.empty()) return;
  out << name << ":\n";
  for (const auto& f : fs) out << "  " << print(f) << "\n";
}

} // namespace

std::string format_full_lp_file(const BoolAlg& a, const BoxTable& box, const ConstantSpec& cs) {
  std::ostringstream out;
  out << "kind: full-lp\n";
  emit_carrier(out, a, "atoms", "carrier", "zero", "neg", "join");
  if (!box.term_universe.empty()) {
    out << "terms:\n";
    for (const auto& t : box.term_universe) out << "  " << print(t) << "\n";
  }
  emit_formulas(out, "formulas", box.formula_universe);
  if (!box.entries.empty()) {
    out << "box:\n";
    for (const auto& [key, v] : box.entries)
      out << "  " << print(key.first) << " | " << print(key.second) << " | " << a.show(v) << "\n";
  }
  emit_cs(out, cs);
  return out.str();
}

std::string format_full_lpb_file(const LpbAlgebra& alg, const ConstantSpec& cs,
                                 const FormulaSet& oracle) {
  std::ostringstream out;
  out << "kind: full-lpb\n";
  emit_carrier(out, alg.formula_alg, "atoms", "carrier", "zero", "neg", "join");
  emit_term_structure(out, alg.ts);
  emit_formulas(out, "formulas", alg.formula_universe);
  if (!alg.box.empty()) {
    out << "box:\n";
    for (const auto& [key, v] : alg.box)
      out << "  " << alg.ts.carrier.show(key.first) << " | " << print(key.second) << " | "
          << alg.formula_alg.show(v) << "\n";
  }
  emit_formulas(out, "oracle", oracle);
  emit_cs(out, cs);
  return out.str();
}

std::string format_poly_lpb_file(const PolyLpbAlgebra& alg, const ConstantSpec& cs,
                                 const FormulaSet& oracle) {
  std::ostringstream out;
  out << "kind: poly-lpb\n";
  emit_carrier(out, alg.formula_alg, "atoms", "carrier", "zero", "neg", "join");
  emit_term_structure(out, alg.ts);
  if (!alg.term_universe.empty()) {
    out << "termuniverse:\n";
    for (const auto& t : alg.term_universe) out << "  " << print(t) << "\n";
  }
  emit_formulas(out, "formulas", alg.formula_universe);
  if (!alg.box.empty()) {
    out << "box:\n";
    for (const auto& [key, v] : alg.box)
      out << "  " << key.first << " | " << print(key.second) << " | " << alg.formula_alg.show(v)
          << "\n";
  }
  emit_formulas(out, "oracle", oracle);
  emit_cs(out, cs);
  return out.str();
}

IsoWitness parse_witness_file(const std::string& text) {
  std::map<Elem, Elem> entries;
  for (const auto& line : logical_lines(text)) {
    std::size_t arrow = line.find("->");
    if (arrow == std::string::npos) throw InputError("expected '<hex> -> <hex>': " + line);
    entries[parse_elem(strip(line.substr(0, arrow)))] = parse_elem(strip(line.substr(arrow + 2)));
  }
  IsoWitness w;
  w.forward.assign(entries.size(), 0);
  for (const auto& [from, to] : entries) {
    if (from >= w.forward.size())
      throw InputError("witness domain must be contiguous from 0");
    w.forward[from] = to;
  }
  return w;
}

std::string format_witness_file(const IsoWitness& w) {
  std::ostringstream out;
  char buf[20];
  for (Elem x = 0; x < w.forward.size(); ++x) {
    std::snprintf(buf, sizeof buf, "%llx -> %llx", static_cast<unsigned long long>(x),
                  static_cast<unsigned long long>(w.forward[x]));
    out << buf << "\n";
  }
  return out.str();
}

} // namespace lpwb
