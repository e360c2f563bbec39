// translate.hpp - from concepts to mu-calculus formulae, and the matching
// model transformations.
//
// q maps a concept without number restrictions node for node onto a
// formula. u targets deterministic structures: every role R gets a sibling
// label R_new, the successors of a node are coded as a first child reached
// by R followed by an R_new chain, and qualified number restrictions count
// along that chain. The star and plus modalities are expanded:
//
//   [S*]p = nu Z. p & [S]Z      <S*>p = mu Z. p | <S>Z
//   [S+]p = [S][S*]p            <S+>p = <S><S*>p

#pragma once

#include <cstddef>
#include <map>
#include <string>
#include <vector>

#include "mualcq/concept.hpp"
#include "mualcq/interpretation.hpp"
#include "mualcq/mucalc.hpp"

namespace mualcq {

/// Throws NumberRestrictionPresent on at-most/at-least nodes.
MuFormula translate_q(const Concept& c);

/// States are the domain, labels the roles, atoms the atomic concepts.
KripkeStructure kripke_of_interpretation(const Interpretation& i);
Interpretation interpretation_of_kripke(const KripkeStructure& m);

struct TranslationResult {
  MuFormula formula;
  /// Source role -> its chain label.
  std::map<std::string, std::string> fresh_roles;
};

/// role -> role_new, suffixed until it collides with nothing in `taken` or
/// with another chosen name.
std::map<std::string, std::string> fresh_role_names(const std::set<std::string>& roles,
                                                    const std::set<std::string>& taken);

TranslationResult translate_u(const Concept& c);

/// Expansions of the starred and plus modalities; `z` names the binder.
MuFormula box_star(const std::string& label, MuFormula f, const std::string& z);
MuFormula diamond_star(const std::string& label, MuFormula f, const std::string& z);

struct ChainedTree {
  KripkeStructure structure;
  /// original_index[k] is the element of the source behind state k.
  std::vector<std::size_t> original_index;
};

/// Re-codes the tree generated by `root` with first-child edges under each
/// role and sibling chains under its fresh label (siblings in domain order).
/// Roles missing from `fresh` get names from fresh_role_names. Throws
/// NotATree when some element reachable from root has two incoming edges,
/// or root has one.
ChainedTree chain_tree_model(const Interpretation& i, std::size_t root,
                             const std::map<std::string, std::string>& fresh = {});

/// Inverse direction: R := R composed with the reflexive-transitive closure
/// of R_new, for every entry of `fresh`; the R_new labels are dropped.
Interpretation collapse_chains(const KripkeStructure& m, const std::map<std::string, std::string>& fresh);

}  // namespace mualcq
