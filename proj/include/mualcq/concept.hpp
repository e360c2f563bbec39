// concept.hpp - immutable AST for concepts with fixpoint binders.
//
// A Concept is a cheap handle onto a shared, immutable node. Structural
// equality (operator==) compares names literally; use alpha_equivalent()
// from syntax.hpp to ignore the choice of bound variable names.

#pragma once

#include <cstddef>
#include <cstdint>
#include <memory>
#include <string>

namespace mualcq {

enum class ConceptKind : std::uint8_t {
  Atomic,
  Var,
  Top,
  Bot,
  Not,
  And,
  Or,
  Exists,
  Forall,
  AtMost,
  AtLeast,
  Mu,
  Nu,
};

enum class FixpointKind : std::uint8_t { Least, Greatest };

class Concept {
 public:
  static Concept atomic(std::string name);
  static Concept var(std::string name);
  static Concept top();
  static Concept bot();
  static Concept negation(Concept c);
  static Concept conj(Concept a, Concept b);
  static Concept disj(Concept a, Concept b);
  static Concept exists(std::string role, Concept c);
  static Concept forall(std::string role, Concept c);
  static Concept at_most(std::uint32_t n, std::string role, Concept c);
  static Concept at_least(std::uint32_t n, std::string role, Concept c);
  static Concept mu(std::string var, Concept body);
  static Concept nu(std::string var, Concept body);
  static Concept fixpoint(FixpointKind kind, std::string var, Concept body);

  ConceptKind kind() const noexcept { return node_->kind; }

  /// Atomic concept name, variable name, or the variable bound by Mu/Nu.
  const std::string& name() const noexcept { return node_->name; }
  /// Role of Exists/Forall/AtMost/AtLeast.
  const std::string& role() const noexcept { return node_->role; }
  /// Bound of AtMost/AtLeast.
  std::uint32_t number() const noexcept { return node_->number; }

  /// Operand of Not, quantifier and restriction filler, binder body.
  const Concept& child() const noexcept { return *node_->first; }
  const Concept& lhs() const noexcept { return *node_->first; }
  const Concept& rhs() const noexcept { return *node_->second; }
  const Concept& body() const noexcept { return *node_->first; }

  bool is_binder() const noexcept { return kind() == ConceptKind::Mu || kind() == ConceptKind::Nu; }
  FixpointKind fixpoint_kind() const noexcept {
    return kind() == ConceptKind::Mu ? FixpointKind::Least : FixpointKind::Greatest;
  }
  bool is_binary() const noexcept { return kind() == ConceptKind::And || kind() == ConceptKind::Or; }
  bool has_role() const noexcept {
    auto k = kind();
    return k == ConceptKind::Exists || k == ConceptKind::Forall || k == ConceptKind::AtMost ||
           k == ConceptKind::AtLeast;
  }
  bool is_leaf() const noexcept {
    auto k = kind();
    return k == ConceptKind::Atomic || k == ConceptKind::Var || k == ConceptKind::Top || k == ConceptKind::Bot;
  }

  /// Number of AST nodes.
  std::size_t size() const noexcept;

  /// Identity of the underlying node; equal handles compare equal cheaply.
  const void* id() const noexcept { return node_.get(); }

  friend bool operator==(const Concept& a, const Concept& b);

 private:
  struct Node {
    ConceptKind kind;
    std::string name;
    std::string role;
    std::uint32_t number = 0;
    std::unique_ptr<Concept> first;
    std::unique_ptr<Concept> second;
  };

  explicit Concept(std::shared_ptr<const Node> n) : node_(std::move(n)) {}
  static Concept make(ConceptKind k, std::string name, std::string role, std::uint32_t n,
                      const Concept* first, const Concept* second);

  std::shared_ptr<const Node> node_;
};

}  // namespace mualcq
