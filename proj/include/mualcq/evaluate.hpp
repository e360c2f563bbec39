// evaluate.hpp - the extension function over finite interpretations.

#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "mualcq/concept.hpp"
#include "mualcq/interpretation.hpp"
#include "mualcq/tbox.hpp"

namespace mualcq {

/// Extension of c in i under rho. Atomic symbols that i does not declare
/// have empty extensions. Throws UnboundVariable if rho misses a free
/// variable of c.
ElementSet evaluate(const Concept& c, const Interpretation& i, const Valuation& rho = {});

struct Approximants {
  ElementSet result;
  /// Distinct approximants E0, E1, ..., ending with the fixpoint.
  std::vector<ElementSet> trace;
};

/// Fixpoint of E -> body under rho[x/E] by iteration from the empty set
/// (least) or the domain (greatest). Throws NonMonotoneOperator unless x
/// occurs positively or not at all in body.
Approximants fixpoint_approximants(FixpointKind kind, const std::string& x, const Concept& body,
                                   const Interpretation& i, const Valuation& rho);

inline constexpr std::size_t kDefaultBruteForceCap = 4;

/// Intersection of all pre-fixpoints (least) or union of all post-fixpoints
/// (greatest), by enumerating every subset of the domain. A test oracle for
/// fixpoint_approximants; throws DomainTooLarge above `cap` elements.
ElementSet tarski_oracle(FixpointKind kind, const std::string& x, const Concept& body, const Interpretation& i,
                         const Valuation& rho, std::size_t cap = kDefaultBruteForceCap);

struct GeneratedSub {
  Interpretation interpretation;
  Valuation valuation;
  /// original_index[k] is the index in the source of new element k.
  std::vector<std::size_t> original_index;
};

/// Restriction of i and rho to the elements reachable from s over the union
/// of all roles (reflexive-transitive closure).
GeneratedSub generated_sub(const Interpretation& i, const Valuation& rho, std::size_t s);
GeneratedSub generated_sub(const Interpretation& i, const Valuation& rho, const std::string& s);

/// Elements reachable from s (including s) over the union of all roles.
ElementSet reachable_from(const Interpretation& i, std::size_t s);

struct TBoxCheck {
  bool satisfied = true;
  /// Index into TBox::assertions of the first violated inclusion.
  std::optional<std::size_t> violated;
};

TBoxCheck satisfies_tbox(const Interpretation& i, const TBox& k);

/// Symbols of c that i does not declare (they evaluate as empty).
std::vector<std::string> undeclared_symbols(const Concept& c, const Interpretation& i);

}  // namespace mualcq
