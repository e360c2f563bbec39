// parser.hpp - surface syntax for concepts and TBoxes.
//
// Grammar (keywords are reserved; `wf` and `id` only when followed by `(`):
//
//   text    := ["free" IDENT ("," IDENT)* ";"] concept
//   concept := and ("or" and)*
//   and     := unary ("and" unary)*
//   unary   := "not" unary
//            | ("exists" | "forall") role "." unary
//            | ("atleast" | "atmost") NAT role "." unary
//            | ("mu" | "nu") IDENT "." concept
//            | atom
//   atom    := "top" | "bot" | IDENT | "(" concept ")" | "wf" "(" role ")"
//   role    := chain ("|" chain)*
//   chain   := post (";" post)*
//   post    := ratom ("*" | "^-")*
//   ratom   := IDENT | "id" "(" concept ")" | "(" role ")"
//
// Quantifier and restriction fillers are unary; a fixpoint binder's body
// extends as far right as possible. An identifier is a variable iff an
// enclosing binder or the `free` header names it, otherwise it is an atomic
// concept. Binders reusing a name already bound elsewhere are renamed.

#pragma once

#include <string>
#include <string_view>

#include "mualcq/concept.hpp"
#include "mualcq/pdl.hpp"
#include "mualcq/tbox.hpp"

namespace mualcq {

/// Parses, desugars compound roles and checks positivity.
Concept parse_concept(std::string_view text);

/// Parses without desugaring or well-formedness checking.
ExtConceptPtr parse_extended_concept(std::string_view text);

/// One `C <= D` or `C == D` per line; blank lines and `#` comments ignored.
/// Throws ClosednessError if a side has free variables.
TBox parse_tbox(std::string_view text);

/// Minimal parenthesization; parse_concept(print_concept(c)) is
/// alpha-equivalent to c. Free variables are listed in a `free` header.
std::string print_concept(const Concept& c);

std::string print_tbox(const TBox& k);

}  // namespace mualcq
