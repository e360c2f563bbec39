// mucalc.hpp - modal mu-calculus formulae and Kripke structures.

#pragma once

#include <cstddef>
#include <cstdint>
#include <map>
#include <memory>
#include <optional>
#include <set>
#include <string>
#include <string_view>
#include <vector>

#include "mualcq/concept.hpp"
#include "mualcq/interpretation.hpp"
#include "mualcq/syntax.hpp"

namespace mualcq {

enum class MuKind : std::uint8_t { Atom, Var, Top, Bot, Not, And, Or, Diamond, Box, Mu, Nu };

class MuFormula {
 public:
  static MuFormula atom(std::string name);
  static MuFormula var(std::string name);
  static MuFormula top();
  static MuFormula bot();
  static MuFormula negation(MuFormula f);
  static MuFormula conj(MuFormula a, MuFormula b);
  static MuFormula disj(MuFormula a, MuFormula b);
  static MuFormula diamond(std::string label, MuFormula f);
  static MuFormula box(std::string label, MuFormula f);
  static MuFormula mu(std::string var, MuFormula body);
  static MuFormula nu(std::string var, MuFormula body);
  static MuFormula fixpoint(FixpointKind kind, std::string var, MuFormula body);

  MuKind kind() const noexcept { return node_->kind; }
  /// Atom, variable, or the variable bound by Mu/Nu.
  const std::string& name() const noexcept { return node_->name; }
  /// Label of Diamond/Box.
  const std::string& label() const noexcept { return node_->label; }
  const MuFormula& child() const noexcept { return *node_->first; }
  const MuFormula& lhs() const noexcept { return *node_->first; }
  const MuFormula& rhs() const noexcept { return *node_->second; }
  const MuFormula& body() const noexcept { return *node_->first; }

  bool is_binder() const noexcept { return kind() == MuKind::Mu || kind() == MuKind::Nu; }
  FixpointKind fixpoint_kind() const noexcept {
    return kind() == MuKind::Mu ? FixpointKind::Least : FixpointKind::Greatest;
  }

  /// Number of AST nodes.
  std::size_t size() const noexcept;

  friend bool operator==(const MuFormula& a, const MuFormula& b);

 private:
  struct Node {
    MuKind kind;
    std::string name;
    std::string label;
    std::unique_ptr<MuFormula> first;
    std::unique_ptr<MuFormula> second;
  };
  explicit MuFormula(std::shared_ptr<const Node> n) : node_(std::move(n)) {}
  static MuFormula make(MuKind k, std::string name, std::string label, const MuFormula* first,
                        const MuFormula* second);

  std::shared_ptr<const Node> node_;
};

std::set<std::string> free_variables(const MuFormula& f);
std::set<std::string> labels_of(const MuFormula& f);
std::set<std::string> atoms_of(const MuFormula& f);

/// Parity of Not nodes above the free occurrences of x.
Polarity polarity_of(const MuFormula& f, const std::string& x);

/// Throws WellFormednessError unless every bound variable occurs under an
/// even number of negations in its binder's body.
void check_well_formed(const MuFormula& f);
bool is_well_formed(const MuFormula& f);

bool alpha_equivalent(const MuFormula& a, const MuFormula& b);

/// `true`, `false`, `~`, `&`, `|`, `<a>`, `[a]`, `mu X.`, `nu X.`; `&`
/// binds tighter than `|`, binder bodies extend as far right as possible.
std::string print_formula(const MuFormula& f);

/// Finite Kripke structure (S, {R_a}, V).
class KripkeStructure {
 public:
  explicit KripkeStructure(std::vector<std::string> states);

  std::size_t size() const noexcept { return states_.size(); }
  const std::vector<std::string>& states() const noexcept { return states_; }
  const std::string& name_of(std::size_t s) const { return states_.at(s); }
  std::optional<std::size_t> index_of(std::string_view name) const;

  void declare_label(const std::string& label);
  void add_edge(const std::string& label, std::size_t from, std::size_t to);
  void set_relation(const std::string& label, Relation r);
  void declare_atom(const std::string& atom);
  void add_to_atom(const std::string& atom, std::size_t state);
  void set_atom(const std::string& atom, ElementSet ext);

  /// nullptr for undeclared labels and atoms.
  const Relation* relation(const std::string& label) const;
  const ElementSet* atom(const std::string& name) const;

  const std::map<std::string, Relation>& relations() const noexcept { return relations_; }
  const std::map<std::string, ElementSet>& valuation() const noexcept { return valuation_; }

  friend bool operator==(const KripkeStructure&, const KripkeStructure&) = default;

 private:
  std::vector<std::string> states_;
  std::map<std::string, Relation> relations_;
  std::map<std::string, ElementSet> valuation_;
};

/// Model file layout with `label` lines in place of `role` lines.
KripkeStructure parse_kripke(std::string_view text);
std::string print_kripke(const KripkeStructure& m);

/// Extension of f in m under rho; undeclared atoms and labels are empty.
/// Throws UnboundVariable.
ElementSet eval_mu(const MuFormula& f, const KripkeStructure& m, const Valuation& rho = {});

struct DeterminismViolation {
  std::string label;
  std::size_t state;
  ElementSet successors;
};

/// nullopt when every relation is a partial function.
std::optional<DeterminismViolation> check_deterministic(const KripkeStructure& m);

}  // namespace mualcq
