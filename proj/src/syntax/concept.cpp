#include "mualcq/concept.hpp"

#include <utility>

namespace mualcq {

Concept Concept::make(ConceptKind k, std::string name, std::string role, std::uint32_t n, const Concept* first,
                      const Concept* second) {
  auto node = std::make_shared<Node>();
  node->kind = k;
  node->name = std::move(name);
  node->role = std::move(role);
  node->number = n;
  if (first != nullptr) node->first = std::make_unique<Concept>(*first);
  if (second != nullptr) node->second = std::make_unique<Concept>(*second);
  return Concept(std::move(node));
}

Concept Concept::atomic(std::string name) { return make(ConceptKind::Atomic, std::move(name), {}, 0, nullptr, nullptr); }
Concept Concept::var(std::string name) { return make(ConceptKind::Var, std::move(name), {}, 0, nullptr, nullptr); }
Concept Concept::top() { return make(ConceptKind::Top, {}, {}, 0, nullptr, nullptr); }
Concept Concept::bot() { return make(ConceptKind::Bot, {}, {}, 0, nullptr, nullptr); }
Concept Concept::negation(Concept c) { return make(ConceptKind::Not, {}, {}, 0, &c, nullptr); }
Concept Concept::conj(Concept a, Concept b) { return make(ConceptKind::And, {}, {}, 0, &a, &b); }
Concept Concept::disj(Concept a, Concept b) { return make(ConceptKind::Or, {}, {}, 0, &a, &b); }
Concept Concept::exists(std::string role, Concept c) {
  return make(ConceptKind::Exists, {}, std::move(role), 0, &c, nullptr);
}
Concept Concept::forall(std::string role, Concept c) {
  return make(ConceptKind::Forall, {}, std::move(role), 0, &c, nullptr);
}
Concept Concept::at_most(std::uint32_t n, std::string role, Concept c) {
  return make(ConceptKind::AtMost, {}, std::move(role), n, &c, nullptr);
}
Concept Concept::at_least(std::uint32_t n, std::string role, Concept c) {
  return make(ConceptKind::AtLeast, {}, std::move(role), n, &c, nullptr);
}
Concept Concept::mu(std::string var, Concept body) {
  return make(ConceptKind::Mu, std::move(var), {}, 0, &body, nullptr);
}
Concept Concept::nu(std::string var, Concept body) {
  return make(ConceptKind::Nu, std::move(var), {}, 0, &body, nullptr);
}
Concept Concept::fixpoint(FixpointKind kind, std::string var, Concept body) {
  return kind == FixpointKind::Least ? mu(std::move(var), std::move(body)) : nu(std::move(var), std::move(body));
}

std::size_t Concept::size() const noexcept {
  std::size_t n = 1;
  if (node_->first) n += node_->first->size();
  if (node_->second) n += node_->second->size();
  return n;
}

bool operator==(const Concept& a, const Concept& b) {
  if (a.node_ == b.node_) return true;
  const auto& x = *a.node_;
  const auto& y = *b.node_;
  if (x.kind != y.kind || x.name != y.name || x.role != y.role || x.number != y.number) return false;
  if (static_cast<bool>(x.first) != static_cast<bool>(y.first)) return false;
  if (x.first && !(*x.first == *y.first)) return false;
  if (static_cast<bool>(x.second) != static_cast<bool>(y.second)) return false;
  if (x.second && !(*x.second == *y.second)) return false;
  return true;
}

}  // namespace mualcq
