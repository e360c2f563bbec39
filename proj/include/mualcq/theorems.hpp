// theorems.hpp - randomized check of the two monotonicity theorems.
//
// Fixpoint monotonicity: if every model of K has C <= D under every
// valuation, then sigma X.C <= sigma X.D, for X positive in C and D.
// Context monotonicity: if K entails C1 <= C2, then D(C1) <= D(C2) for X
// positive in D(X), and D(C2) <= D(C1) for X negative.
//
// Both are checked model by model: instances are drawn over concepts
// {a, b} and role {r}, the premise is evaluated on every model of K with at
// most `max_size` elements and every valuation of X, and when it holds the
// conclusion is checked on the same models. Generation is biased so that
// most premises hold.

#pragma once

#include <cstddef>
#include <cstdint>

#include "mualcq/report.hpp"

namespace mualcq {

struct TheoremSuiteConfig {
  std::size_t samples = 200;
  std::uint64_t seed = 1;
  std::size_t max_size = 2;
};

SuiteReport theorem_suite(const TheoremSuiteConfig& cfg);

}  // namespace mualcq
