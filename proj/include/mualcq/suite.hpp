// suite.hpp - randomized property suites over the evaluators and
// translations. Each suite is deterministic for a given seed.

#pragma once

#include <cstddef>
#include <cstdint>
#include <vector>

#include "mualcq/report.hpp"

namespace mualcq {

struct SuiteConfig {
  std::size_t samples = 0;
  std::uint64_t seed = 1;
  std::size_t brute_force_cap = 4;
};

/// Fixpoint unfolding, mu/nu duality, mu below nu, vacuous binders, bound
/// variable renaming, the derived-constructor equalities, valuation
/// independence of closed concepts, and the substitution lemma, on random
/// (concept, interpretation, valuation) triples with depth <= 4, |domain|
/// <= 4.
SuiteReport law_suite(const SuiteConfig& cfg);

/// Iterated fixpoints against the brute-force oracle; every trace must be a
/// strict chain of at most |domain| + 1 sets.
SuiteReport tarski_suite(const SuiteConfig& cfg);

/// Membership is preserved by the sub-interpretation generated by an
/// element.
SuiteReport generated_sub_suite(const SuiteConfig& cfg);

/// Concepts without number restrictions and their q translations have equal
/// extensions, and q preserves node counts and well-formedness.
SuiteReport q_suite(const SuiteConfig& cfg);

/// On random trees (depth <= 3, branching <= 3) and concepts with n <= 3,
/// u translations agree with the source concept on the chained structure,
/// the chained structure is deterministic, u mentions only source roles and
/// their chain labels, and collapsing the chains restores every extension.
SuiteReport u_tree_suite(const SuiteConfig& cfg);

/// All of the above plus the monotonicity theorems, with `samples`
/// overriding each suite's default count when non-zero.
std::vector<SuiteReport> run_all_suites(const SuiteConfig& cfg);

}  // namespace mualcq
