#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <tuple>
#include <vector>

#include "lpwb/errors.hpp"
#include "lpwb/syntax.hpp"

// Decides the LPB equational theory of proof terms: Boolean-algebra
// identities over +, -, 0 plus congruence for all five operators. The
// canonical form is a reduced ordered BDD whose decision atoms are
// variables, constants, and applications/bangs of canonical arguments
// (nothing relates * and ! to the Boolean structure, so they stay opaque).
namespace lpwb {

class TermCanon {
public:
  using NodeId = std::uint32_t;
  static constexpr NodeId kFalse = 0;
  static constexpr NodeId kTrue = 1;

  NodeId canonicalize(const TermPtr& t);

  NodeId bdd_not(NodeId f);
  NodeId bdd_or(NodeId f, NodeId g);
  NodeId bdd_and(NodeId f, NodeId g);

  bool leq(NodeId f, NodeId g) { return bdd_or(f, g) == g; }

  // Deterministic textual form; equal across managers iff the canonical
  // forms coincide.
  std::string serialize(NodeId f) const;

private:
  enum class AtomKind { Var, Const, App, Bang };
  struct Atom {
    AtomKind kind;
    std::string name; // Var/Const
    NodeId a = kFalse, b = kFalse; // App uses both, Bang uses a
  };
  struct Node {
    std::uint32_t atom;
    NodeId lo, hi;
  };

  std::vector<Atom> atoms_;
  std::map<std::tuple<int, std::string, NodeId, NodeId>, std::uint32_t> atom_intern_;
  std::vector<Node> nodes_; // index - 2, ids 0/1 are terminals
  std::map<std::tuple<std::uint32_t, NodeId, NodeId>, NodeId> node_intern_;
  std::map<std::pair<NodeId, NodeId>, NodeId> or_memo_;
  std::map<NodeId, NodeId> not_memo_;

  const Node& node(NodeId id) const { return nodes_[id - 2]; }
  std::uint32_t intern_atom(AtomKind k, std::string name, NodeId a, NodeId b);
  NodeId mk_node(std::uint32_t atom, NodeId lo, NodeId hi);
  NodeId atom_node(std::uint32_t atom) { return mk_node(atom, kFalse, kTrue); }

  // Structural total order giving the (global) BDD variable order.
  int compare_atoms(std::uint32_t a, std::uint32_t b) const;
  int compare_nodes(NodeId a, NodeId b) const;
};

// Canonical printed form over a fresh manager; stable across runs.
std::string canonical_form(const TermPtr& t);

bool term_equal(const TermPtr& s, const TermPtr& t);
bool term_leq(const TermPtr& s, const TermPtr& t); // s + t == t

// Independent oracle: identifies the maximal non-Boolean atoms recursively
// and sweeps all 0/1 assignments of the distinct atoms (2^k, k capped).
bool brute_force_equal(const TermPtr& s, const TermPtr& t, std::size_t atom_cap = 20);

} // namespace lpwb
