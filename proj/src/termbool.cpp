#include "lpwb/termbool.hpp"

#include <algorithm>

namespace lpwb {

std::uint32_t TermCanon::intern_atom(AtomKind k, std::string name, NodeId a, NodeId b) {
  auto key = std::make_tuple(static_cast<int>(k), name, a, b);
  auto it = atom_intern_.find(key);
  if (it != atom_intern_.end()) return it->second;
  atoms_.push_back({k, std::move(name), a, b});
  std::uint32_t id = static_cast<std::uint32_t>(atoms_.size() - 1);
  atom_intern_.emplace(std::move(key), id);
  return id;
}

TermCanon::NodeId TermCanon::mk_node(std::uint32_t atom, NodeId lo, NodeId hi) {
  if (lo == hi) return lo;
  auto key = std::make_tuple(atom, lo, hi);
  auto it = node_intern_.find(key);
  if (it != node_intern_.end()) return it->second;
  nodes_.push_back({atom, lo, hi});
  NodeId id = static_cast<NodeId>(nodes_.size() + 1);
  node_intern_.emplace(key, id);
  return id;
}

int TermCanon::compare_atoms(std::uint32_t a, std::uint32_t b) const {
  if (a == b) return 0;
  const Atom& x = atoms_[a];
  const Atom& y = atoms_[b];
  if (x.kind != y.kind) return static_cast<int>(x.kind) < static_cast<int>(y.kind) ? -1 : 1;
  if (int c = x.name.compare(y.name)) return c < 0 ? -1 : 1;
  if (int c = compare_nodes(x.a, y.a)) return c;
  return compare_nodes(x.b, y.b);
}

int TermCanon::compare_nodes(NodeId a, NodeId b) const {
  if (a == b) return 0;
  bool at = a <= kTrue, bt = b <= kTrue;
  if (at || bt) {
    if (at && bt) return a < b ? -1 : 1;
    return at ? -1 : 1;
  }
  const Node& x = node(a);
  const Node& y = node(b);
  if (int c = compare_atoms(x.atom, y.atom)) return c;
  if (int c = compare_nodes(x.lo, y.lo)) return c;
  return compare_nodes(x.hi, y.hi);
}

TermCanon::NodeId TermCanon::bdd_not(NodeId f) {
  if (f == kFalse) return kTrue;
  if (f == kTrue) return kFalse;
  auto it = not_memo_.find(f);
  if (it != not_memo_.end()) return it->second;
  const Node n = node(f);
  NodeId r = mk_node(n.atom, bdd_not(n.lo), bdd_not(n.hi));
  not_memo_.emplace(f, r);
  return r;
}

TermCanon::NodeId TermCanon::bdd_or(NodeId f, NodeId g) {
  if (f == g) return f;
  if (f == kTrue || g == kTrue) return kTrue;
  if (f == kFalse) return g;
  if (g == kFalse) return f;
  if (f > g) std::swap(f, g);
  auto it = or_memo_.find({f, g});
  if (it != or_memo_.end()) return it->second;
  const Node nf = node(f); // by value: mk_node below may grow nodes_
  const Node ng = node(g);
  int c = compare_atoms(nf.atom, ng.atom);
  NodeId r;
  if (c == 0)
    r = mk_node(nf.atom, bdd_or(nf.lo, ng.lo), bdd_or(nf.hi, ng.hi));
  else if (c < 0)
    r = mk_node(nf.atom, bdd_or(nf.lo, g), bdd_or(nf.hi, g));
  else
    r = mk_node(ng.atom, bdd_or(f, ng.lo), bdd_or(f, ng.hi));
  or_memo_.emplace(std::make_pair(f, g), r);
  return r;
}

TermCanon::NodeId TermCanon::bdd_and(NodeId f, NodeId g) {
  return bdd_not(bdd_or(bdd_not(f), bdd_not(g)));
}

TermCanon::NodeId TermCanon::canonicalize(const TermPtr& t) {
  switch (t->kind) {
    case TermKind::Var:
      return atom_node(intern_atom(AtomKind::Var, t->name, kFalse, kFalse));
    case TermKind::Const:
      return atom_node(intern_atom(AtomKind::Const, t->name, kFalse, kFalse));
    case TermKind::Zero:
      return kFalse;
    case TermKind::Neg:
      return bdd_not(canonicalize(t->left));
    case TermKind::Sum:
      return bdd_or(canonicalize(t->left), canonicalize(t->right));
    case TermKind::App: {
      NodeId a = canonicalize(t->left);
      NodeId b = canonicalize(t->right);
      return atom_node(intern_atom(AtomKind::App, "", a, b));
    }
    case TermKind::Bang:
      return atom_node(intern_atom(AtomKind::Bang, "", canonicalize(t->left), kFalse));
  }
  return kFalse;
}

std::string TermCanon::serialize(NodeId f) const {
  if (f == kFalse) return "0";
  if (f == kTrue) return "1";
  const Node& n = node(f);
  const Atom& a = atoms_[n.atom];
  std::string av;
  switch (a.kind) {
    case AtomKind::Var: av = "v:" + a.name; break;
    case AtomKind::Const: av = "c:" + a.name; break;
    case AtomKind::App: av = "a(" + serialize(a.a) + "," + serialize(a.b) + ")"; break;
    case AtomKind::Bang: av = "b(" + serialize(a.a) + ")"; break;
  }
  return "(" + av + "?" + serialize(n.hi) + ":" + serialize(n.lo) + ")";
}

std::string canonical_form(const TermPtr& t) {
  TermCanon canon;
  return canon.serialize(canon.canonicalize(t));
}

bool term_equal(const TermPtr& s, const TermPtr& t) {
  TermCanon canon;
  return canon.canonicalize(s) == canon.canonicalize(t);
}

bool term_leq(const TermPtr& s, const TermPtr& t) {
  TermCanon canon;
  TermCanon::NodeId a = canon.canonicalize(s);
  TermCanon::NodeId b = canon.canonicalize(t);
  return canon.leq(a, b);
}

namespace {

// Maximal non-Boolean subterms, in occurrence order.
void skeleton_leaves(const TermPtr& t, std::vector<TermPtr>& out) {
  switch (t->kind) {
    case TermKind::Zero: return;
    case TermKind::Neg:
      skeleton_leaves(t->left, out);
      return;
    case TermKind::Sum:
      skeleton_leaves(t->left, out);
      skeleton_leaves(t->right, out);
      return;
    default:
      out.push_back(t);
      return;
  }
}

bool atoms_equiv(const TermPtr& u, const TermPtr& v, std::size_t cap) {
  if (u->kind != v->kind) return false;
  switch (u->kind) {
    case TermKind::Var:
    case TermKind::Const: return u->name == v->name;
    case TermKind::App:
      return brute_force_equal(u->left, v->left, cap) &&
             brute_force_equal(u->right, v->right, cap);
    case TermKind::Bang: return brute_force_equal(u->left, v->left, cap);
    default: return false;
  }
}

int eval_skeleton(const TermPtr& t, const std::vector<TermPtr>& reps,
                  const std::vector<int>& bits, std::size_t cap) {
  switch (t->kind) {
    case TermKind::Zero: return 0;
    case TermKind::Neg: return 1 - eval_skeleton(t->left, reps, bits, cap);
    case TermKind::Sum:
      return std::max(eval_skeleton(t->left, reps, bits, cap),
                      eval_skeleton(t->right, reps, bits, cap));
    default:
      for (std::size_t i = 0; i < reps.size(); ++i)
        if (atoms_equiv(t, reps[i], cap)) return bits[i];
      return 0; // unreachable: every leaf was classified
  }
}

} // namespace

bool brute_force_equal(const TermPtr& s, const TermPtr& t, std::size_t atom_cap) {
  std::vector<TermPtr> leaves;
  skeleton_leaves(s, leaves);
  skeleton_leaves(t, leaves);
  std::vector<TermPtr> reps;
  for (const auto& leaf : leaves) {
    bool known = false;
    for (const auto& r : reps)
      if (atoms_equiv(leaf, r, atom_cap)) { known = true; break; }
    if (!known) reps.push_back(leaf);
  }
  if (reps.size() > atom_cap)
    throw BudgetError("brute_force_equal: " + std::to_string(reps.size()) +
                      " distinct atoms exceed the cap of " + std::to_string(atom_cap));
  std::vector<int> bits(reps.size(), 0);
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << reps.size()); ++mask) {
    for (std::size_t i = 0; i < reps.size(); ++i) bits[i] = (mask >> i) & 1;
    if (eval_skeleton(s, reps, bits, atom_cap) != eval_skeleton(t, reps, bits, atom_cap))
      return false;
  }
  return true;
}

} // namespace lpwb
