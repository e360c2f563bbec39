// generate.hpp - random concepts and interpretations for property testing.
//
// All generators draw from a caller-owned std::mt19937_64, so a seed fixes
// the whole sequence.

#pragma once

#include <cstddef>
#include <cstdint>
#include <random>
#include <string>
#include <vector>

#include "mualcq/concept.hpp"
#include "mualcq/interpretation.hpp"

namespace mualcq {

using Rng = std::mt19937_64;

struct ConceptShape {
  std::vector<std::string> concepts{"a", "b"};
  std::vector<std::string> roles{"r", "s"};
  /// Free variables that may appear at any polarity.
  std::vector<std::string> free_vars;
  /// Names for binders; drawing the same name twice produces shadowing.
  std::vector<std::string> binder_names{"X", "Y", "Z"};
  std::size_t max_depth = 4;
  std::uint32_t max_number = 3;
  bool number_restrictions = true;
  bool fixpoints = true;
};

/// A well-formed concept: every bound occurrence is positive with respect
/// to its binder.
Concept random_concept(Rng& rng, const ConceptShape& shape);

/// A well-formed concept in which `x` occurs free, positively when
/// `positive` is true and negatively otherwise. `x` must not be a binder
/// name of the shape.
Concept random_context(Rng& rng, const ConceptShape& shape, const std::string& x, bool positive);

/// Every concept and role of `sig` declared; each membership bit is set with
/// probability `density`.
Interpretation random_interpretation(Rng& rng, std::size_t size, const Signature& sig, double density = 0.4);

Valuation random_valuation(Rng& rng, const Interpretation& i, const std::vector<std::string>& vars);

ElementSet random_subset(Rng& rng, std::size_t universe);

/// A tree rooted at element 0 (named t1), each node with at most
/// `branching` children, edges labelled with random roles of `sig`. Domain
/// order is breadth-first.
Interpretation random_tree(Rng& rng, std::size_t max_depth, std::size_t branching, const Signature& sig,
                           double density = 0.5);

}  // namespace mualcq
