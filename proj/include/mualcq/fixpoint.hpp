// fixpoint.hpp - Kleene iteration shared by the concept and formula
// evaluators.

#pragma once

#include <cstddef>
#include <vector>

#include "mualcq/concept.hpp"
#include "mualcq/element_set.hpp"
#include "mualcq/errors.hpp"

namespace mualcq {

/// Iterates `step` from the empty set (least) or the full set (greatest)
/// until it stabilizes. When `trace` is given, every distinct approximant is
/// appended, starting with the initial one.
///
/// A monotone operator on an n-element universe produces a chain of at most
/// n+1 distinct approximants; a step that leaves the chain throws
/// NonMonotoneOperator.
template <typename Step>
ElementSet iterate_fixpoint(FixpointKind kind, std::size_t universe, Step&& step,
                            std::vector<ElementSet>* trace = nullptr) {
  ElementSet current = kind == FixpointKind::Least ? ElementSet(universe) : ElementSet::full(universe);
  if (trace != nullptr) trace->push_back(current);
  for (std::size_t round = 0;; ++round) {
    ElementSet next = step(current);
    if (next == current) return current;
    bool chain = kind == FixpointKind::Least ? current.subset_of(next) : next.subset_of(current);
    if (!chain || round > universe) throw NonMonotoneOperator("fixpoint iteration left the approximant chain");
    current = std::move(next);
    if (trace != nullptr) trace->push_back(current);
  }
}

}  // namespace mualcq
