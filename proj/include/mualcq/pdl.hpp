// pdl.hpp - extended surface AST with compound role expressions.
//
// The parser first builds an ExtConcept, in which quantifiers may carry
// chained, united, starred or test roles and `wf(R)` may appear. desugar_pdl
// rewrites those into plain concepts over atomic roles:
//
//   exists R1;R2. C   => exists R1. exists R2. C
//   exists R1|R2. C   => (exists R1. C) or (exists R2. C)
//   exists R*. C      => mu X. C or exists R. X
//   exists id(D). C   => C and D
//   forall R*. C      => nu X. C and forall R. X   (other forall cases dually)
//   wf(R)             => mu X. forall R. X
//
// Number restrictions only accept atomic roles.

#pragma once

#include <cstdint>
#include <memory>
#include <string>

#include "mualcq/concept.hpp"

namespace mualcq {

struct ExtConcept;
using ExtConceptPtr = std::shared_ptr<const ExtConcept>;

enum class RoleKind : std::uint8_t { Atomic, Chain, Union, Star, IdTest, Inverse };

struct RoleExpr;
using RoleExprPtr = std::shared_ptr<const RoleExpr>;

struct RoleExpr {
  RoleKind kind = RoleKind::Atomic;
  std::string name;    // Atomic
  RoleExprPtr left;    // Chain, Union, Star, Inverse
  RoleExprPtr right;   // Chain, Union
  ExtConceptPtr test;  // IdTest

  static RoleExprPtr atomic(std::string name);
  static RoleExprPtr chain(RoleExprPtr a, RoleExprPtr b);
  static RoleExprPtr alt(RoleExprPtr a, RoleExprPtr b);
  static RoleExprPtr star(RoleExprPtr r);
  static RoleExprPtr id_test(ExtConceptPtr c);
  static RoleExprPtr inverse(RoleExprPtr r);
};

enum class ExtKind : std::uint8_t {
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
  Wf,
};

struct ExtConcept {
  ExtKind kind = ExtKind::Top;
  std::string name;  // Atomic, Var, binder variable
  RoleExprPtr role;  // quantifiers, restrictions, Wf
  std::uint32_t number = 0;
  ExtConceptPtr first;
  ExtConceptPtr second;
};

/// Rewrites compound roles away. Throws UnsupportedRole for a number
/// restriction over a compound role and InverseRoleUnsupported for `^-`.
Concept desugar_pdl(const ExtConcept& c);

}  // namespace mualcq
