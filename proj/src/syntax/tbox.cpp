#include "mualcq/tbox.hpp"

#include "mualcq/errors.hpp"
#include "mualcq/parser.hpp"
#include "mualcq/syntax.hpp"

namespace mualcq {

std::set<std::string> TBox::atomic_concepts() const {
  std::set<std::string> out;
  for (const auto& a : assertions) {
    out.merge(mualcq::atomic_concepts(a.lhs));
    out.merge(mualcq::atomic_concepts(a.rhs));
  }
  return out;
}

std::set<std::string> TBox::roles() const {
  std::set<std::string> out;
  for (const auto& a : assertions) {
    out.merge(roles_of(a.lhs));
    out.merge(roles_of(a.rhs));
  }
  return out;
}

void check_closed(const TBox& k) {
  for (const auto& a : k.assertions) {
    for (const auto* side : {&a.lhs, &a.rhs}) {
      auto fv = free_variables(*side);
      if (!fv.empty())
        throw ClosednessError("assertion side '" + print_concept(*side) + "' has free variable " + *fv.begin());
    }
  }
}

}  // namespace mualcq
