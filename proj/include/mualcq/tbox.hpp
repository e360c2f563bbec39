// tbox.hpp - terminological boxes: ordered lists of inclusion assertions.

#pragma once

#include <set>
#include <string>
#include <vector>

#include "mualcq/concept.hpp"

namespace mualcq {

struct Inclusion {
  Concept lhs;
  Concept rhs;
};

struct TBox {
  std::vector<Inclusion> assertions;

  bool empty() const noexcept { return assertions.empty(); }
  std::size_t size() const noexcept { return assertions.size(); }

  void add(Concept lhs, Concept rhs) { assertions.push_back({std::move(lhs), std::move(rhs)}); }
  /// Stored as the two inclusions lhs <= rhs and rhs <= lhs.
  void add_equivalence(const Concept& lhs, const Concept& rhs) {
    add(lhs, rhs);
    add(rhs, lhs);
  }

  std::set<std::string> atomic_concepts() const;
  std::set<std::string> roles() const;
};

/// Throws ClosednessError if any side has a free variable.
void check_closed(const TBox& k);

}  // namespace mualcq
