#include "mualcq/evaluate.hpp"

#include <algorithm>
#include <set>

#include "mualcq/errors.hpp"
#include "mualcq/fixpoint.hpp"
#include "mualcq/syntax.hpp"

namespace mualcq {

namespace {

class Evaluator {
 public:
  Evaluator(const Interpretation& i, Valuation env) : i_(i), env_(std::move(env)), n_(i.size()) {}

  ElementSet eval(const Concept& c) {
    switch (c.kind()) {
      case ConceptKind::Atomic: {
        const auto* ext = i_.concept_extension(c.name());
        return ext != nullptr ? *ext : ElementSet(n_);
      }
      case ConceptKind::Var: {
        auto it = env_.find(c.name());
        if (it == env_.end()) throw UnboundVariable("no value for variable " + c.name());
        return it->second;
      }
      case ConceptKind::Top: return ElementSet::full(n_);
      case ConceptKind::Bot: return ElementSet(n_);
      case ConceptKind::Not: return eval(c.child()).complement();
      case ConceptKind::And: {
        ElementSet a = eval(c.lhs());
        return a &= eval(c.rhs());
      }
      case ConceptKind::Or: {
        ElementSet a = eval(c.lhs());
        return a |= eval(c.rhs());
      }
      case ConceptKind::Exists:
      case ConceptKind::Forall:
      case ConceptKind::AtMost:
      case ConceptKind::AtLeast: return restriction(c, eval(c.child()));
      case ConceptKind::Mu:
      case ConceptKind::Nu: return fixpoint(c.fixpoint_kind(), c.name(), c.body(), nullptr);
    }
    return ElementSet(n_);
  }

  ElementSet fixpoint(FixpointKind kind, const std::string& x, const Concept& body, std::vector<ElementSet>* trace) {
    auto saved = env_.find(x) != env_.end() ? std::optional<ElementSet>(env_.at(x)) : std::nullopt;
    auto step = [&](const ElementSet& e) {
      env_.insert_or_assign(x, e);
      return eval(body);
    };
    ElementSet result = iterate_fixpoint(kind, n_, step, trace);
    if (saved)
      env_.insert_or_assign(x, *saved);
    else
      env_.erase(x);
    return result;
  }

 private:
  ElementSet restriction(const Concept& c, const ElementSet& filler) const {
    ElementSet out(n_);
    const Relation* r = i_.role_extension(c.role());
    for (std::size_t s = 0; s < n_; ++s) {
      std::size_t hits = r != nullptr ? r->successors(s).count_common(filler) : 0;
      bool member = false;
      switch (c.kind()) {
        case ConceptKind::Exists: member = hits > 0; break;
        case ConceptKind::Forall:
          member = r == nullptr || r->successors(s).subset_of(filler);
          break;
        case ConceptKind::AtMost: member = hits <= c.number(); break;
        case ConceptKind::AtLeast: member = hits >= c.number(); break;
        default: break;
      }
      if (member) out.insert(s);
    }
    return out;
  }

  const Interpretation& i_;
  Valuation env_;
  std::size_t n_;
};

void check_valuation(const Interpretation& i, const Valuation& rho) {
  for (const auto& [name, set] : rho)
    if (set.universe() != i.size()) throw std::invalid_argument("valuation of " + name + " has the wrong universe");
}

}  // namespace

ElementSet evaluate(const Concept& c, const Interpretation& i, const Valuation& rho) {
  check_valuation(i, rho);
  return Evaluator(i, rho).eval(c);
}

Approximants fixpoint_approximants(FixpointKind kind, const std::string& x, const Concept& body,
                                   const Interpretation& i, const Valuation& rho) {
  auto p = polarity_of(body, x);
  if (p != Polarity::Positive && p != Polarity::Absent)
    throw NonMonotoneOperator("variable " + x + " occurs " + to_string(p) + "ly in the fixpoint body");
  check_valuation(i, rho);
  Approximants out;
  Evaluator ev(i, rho);
  out.result = ev.fixpoint(kind, x, body, &out.trace);
  return out;
}

ElementSet tarski_oracle(FixpointKind kind, const std::string& x, const Concept& body, const Interpretation& i,
                         const Valuation& rho, std::size_t cap) {
  const std::size_t n = i.size();
  if (n > cap) throw DomainTooLarge("brute-force oracle is capped at " + std::to_string(cap) + " elements");
  ElementSet acc = kind == FixpointKind::Least ? ElementSet::full(n) : ElementSet(n);
  Valuation env = rho;
  for (std::uint64_t bits = 0; bits < (std::uint64_t{1} << n); ++bits) {
    ElementSet e(n);
    for (std::size_t k = 0; k < n; ++k)
      if ((bits >> k) & 1U) e.insert(k);
    env.insert_or_assign(x, e);
    ElementSet image = evaluate(body, i, env);
    if (kind == FixpointKind::Least && image.subset_of(e)) acc &= e;
    if (kind == FixpointKind::Greatest && e.subset_of(image)) acc |= e;
  }
  return acc;
}

ElementSet reachable_from(const Interpretation& i, std::size_t s) {
  if (s >= i.size()) throw UnknownIndividual("individual index " + std::to_string(s) + " out of range");
  ElementSet seen(i.size());
  seen.insert(s);
  std::vector<std::size_t> work{s};
  while (!work.empty()) {
    auto a = work.back();
    work.pop_back();
    for (const auto& [name, rel] : i.roles()) {
      for (auto b : rel.successors(a).elements()) {
        if (seen.contains(b)) continue;
        seen.insert(b);
        work.push_back(b);
      }
    }
  }
  return seen;
}

GeneratedSub generated_sub(const Interpretation& i, const Valuation& rho, std::size_t s) {
  ElementSet keep = reachable_from(i, s);
  std::vector<std::size_t> old_of_new = keep.elements();
  std::vector<std::size_t> new_of_old(i.size(), i.size());
  std::vector<std::string> names;
  for (std::size_t k = 0; k < old_of_new.size(); ++k) {
    new_of_old[old_of_new[k]] = k;
    names.push_back(i.name_of(old_of_new[k]));
  }
  const std::size_t m = names.size();
  auto restrict_set = [&](const ElementSet& src) {
    ElementSet out(m);
    for (std::size_t k = 0; k < m; ++k)
      if (src.contains(old_of_new[k])) out.insert(k);
    return out;
  };

  Interpretation sub(std::move(names));
  for (const auto& [name, ext] : i.concepts()) sub.set_concept(name, restrict_set(ext));
  for (const auto& [name, rel] : i.roles()) {
    Relation r(m);
    for (auto [a, b] : rel.pairs())
      if (keep.contains(a) && keep.contains(b)) r.insert(new_of_old[a], new_of_old[b]);
    sub.set_role(name, std::move(r));
  }
  Valuation val;
  for (const auto& [name, ext] : rho) val.emplace(name, restrict_set(ext));
  return GeneratedSub{std::move(sub), std::move(val), std::move(old_of_new)};
}

GeneratedSub generated_sub(const Interpretation& i, const Valuation& rho, const std::string& s) {
  return generated_sub(i, rho, i.require_index(s));
}

TBoxCheck satisfies_tbox(const Interpretation& i, const TBox& k) {
  for (std::size_t idx = 0; idx < k.assertions.size(); ++idx) {
    const auto& a = k.assertions[idx];
    if (!evaluate(a.lhs, i).subset_of(evaluate(a.rhs, i))) return TBoxCheck{false, idx};
  }
  return {};
}

std::vector<std::string> undeclared_symbols(const Concept& c, const Interpretation& i) {
  std::vector<std::string> out;
  for (const auto& a : atomic_concepts(c))
    if (i.concept_extension(a) == nullptr) out.push_back(a);
  for (const auto& r : roles_of(c))
    if (i.role_extension(r) == nullptr) out.push_back(r);
  return out;
}

}  // namespace mualcq
