// search.hpp - backtracking model search over partial interpretations.
//
// The search fixes one membership bit at a time (an element in a concept or
// a pair in a role) and evaluates every concept involved under three-valued
// semantics: for each concept it keeps a lower bound (members in every
// completion) and an upper bound (members in some completion). A branch is
// cut as soon as some assertion C <= D has lo(C) outside hi(D), or the goal
// has an empty upper bound. Bits are assigned 0 before 1, in a fixed order,
// so the first solution is the lexicographically least assignment in that
// order.
//
// Bit order (see search_order): symbols connected to the goal through
// shared assertions come first; within each connected group roles precede
// concepts, and concepts that an assertion defines in terms of others come
// after the symbols they depend on.

#pragma once

#include <cstddef>
#include <cstdint>
#include <functional>
#include <memory>
#include <string>
#include <vector>

#include "mualcq/concept.hpp"
#include "mualcq/interpretation.hpp"
#include "mualcq/tbox.hpp"

namespace mualcq {

struct Symbol {
  bool is_role = false;
  std::string name;
  friend bool operator==(const Symbol&, const Symbol&) = default;
};

/// Orders the symbols of k, the goals and `extra` for branching.
std::vector<Symbol> search_order(const TBox& k, const std::vector<Concept>& goals, const Signature& extra = {});

Signature signature_of(const std::vector<Symbol>& order);

struct SearchStats {
  std::uint64_t nodes = 0;
  std::uint64_t leaves = 0;
};

/// Called with a model of the assertions and the (non-empty) extension of
/// the goal in it. Return false to stop.
using SolutionCallback = std::function<bool(const Interpretation&, const ElementSet&)>;

class ModelSearch {
 public:
  /// All concepts must be closed and well-formed. Symbols not in `order` are
  /// treated as empty.
  ModelSearch(TBox assertions, Concept goal, std::vector<Symbol> order);
  ~ModelSearch();
  ModelSearch(const ModelSearch&) = delete;
  ModelSearch& operator=(const ModelSearch&) = delete;

  /// Visits the solutions over the domain d1..dn in search order. Every
  /// solution is re-checked with the exact evaluator; a mismatch throws
  /// InternalError.
  void run(std::size_t n, const SolutionCallback& f, SearchStats* stats = nullptr) const;

  /// Same solution set, visited in enumerate.hpp counter order over
  /// signature_of(order) without pruning. Throws CapExceeded.
  void run_unpruned(std::size_t n, const SolutionCallback& f, SearchStats* stats = nullptr) const;

 private:
  struct Impl;
  std::unique_ptr<Impl> impl_;
};

}  // namespace mualcq
