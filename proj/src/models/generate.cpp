#include "mualcq/generate.hpp"

#include <map>

#include "mualcq/syntax.hpp"

namespace mualcq {

namespace {

template <typename T>
const T& pick(Rng& rng, const std::vector<T>& xs) {
  return xs[std::uniform_int_distribution<std::size_t>(0, xs.size() - 1)(rng)];
}

bool coin(Rng& rng, double p) { return std::bernoulli_distribution(p)(rng); }

class Generator {
 public:
  Generator(Rng& rng, const ConceptShape& shape) : rng_(rng), shape_(shape) {}

  /// `scope` maps visible bound names to the parity at which they were
  /// bound; a bound name may only be used at the same parity.
  Concept gen(std::size_t depth, std::map<std::string, int>& scope, int parity) {
    if (depth == 0 || coin(rng_, 0.08)) return leaf(scope, parity);
    std::vector<int> choices{0, 1, 2, 3, 4};
    if (shape_.number_restrictions) choices.insert(choices.end(), {5, 6});
    if (shape_.fixpoints && !shape_.binder_names.empty()) choices.insert(choices.end(), {7, 7});
    switch (pick(rng_, choices)) {
      case 0: return Concept::negation(gen(depth - 1, scope, parity + 1));
      case 1: return Concept::conj(gen(depth - 1, scope, parity), gen(depth - 1, scope, parity));
      case 2: return Concept::disj(gen(depth - 1, scope, parity), gen(depth - 1, scope, parity));
      case 3: return Concept::exists(pick(rng_, shape_.roles), gen(depth - 1, scope, parity));
      case 4: return Concept::forall(pick(rng_, shape_.roles), gen(depth - 1, scope, parity));
      case 5: {
        auto n = std::uniform_int_distribution<std::uint32_t>(0, shape_.max_number)(rng_);
        return Concept::at_most(n, pick(rng_, shape_.roles), gen(depth - 1, scope, parity + 1));
      }
      case 6: {
        auto n = std::uniform_int_distribution<std::uint32_t>(0, shape_.max_number)(rng_);
        return Concept::at_least(n, pick(rng_, shape_.roles), gen(depth - 1, scope, parity));
      }
      default: {
        const std::string& x = pick(rng_, shape_.binder_names);
        int saved = scope.contains(x) ? scope[x] : -1;
        scope[x] = parity;
        Concept body = gen(depth - 1, scope, parity);
        if (saved >= 0)
          scope[x] = saved;
        else
          scope.erase(x);
        auto kind = coin(rng_, 0.5) ? FixpointKind::Least : FixpointKind::Greatest;
        return Concept::fixpoint(kind, x, std::move(body));
      }
    }
  }

 private:
  Concept leaf(const std::map<std::string, int>& scope, int parity) {
    std::vector<std::string> vars;
    for (const auto& [name, p] : scope)
      if ((parity - p) % 2 == 0) vars.push_back(name);
    for (const auto& v : shape_.free_vars)
      if (!scope.contains(v)) vars.push_back(v);
    double r = std::uniform_real_distribution<double>(0, 1)(rng_);
    if (!vars.empty() && r < 0.4) return Concept::var(pick(rng_, vars));
    if (r < 0.55) return coin(rng_, 0.5) ? Concept::top() : Concept::bot();
    return Concept::atomic(pick(rng_, shape_.concepts));
  }

  Rng& rng_;
  const ConceptShape& shape_;
};

}  // namespace

Concept random_concept(Rng& rng, const ConceptShape& shape) {
  Generator g(rng, shape);
  std::map<std::string, int> scope;
  return g.gen(shape.max_depth, scope, 0);
}

Concept random_context(Rng& rng, const ConceptShape& shape, const std::string& x, bool positive) {
  Generator g(rng, shape);
  Polarity want = positive ? Polarity::Positive : Polarity::Negative;
  for (int attempt = 0; attempt < 20; ++attempt) {
    std::map<std::string, int> scope{{x, positive ? 0 : 1}};
    Concept c = g.gen(shape.max_depth, scope, 0);
    if (polarity_of(c, x) == want) return c;
  }
  std::map<std::string, int> scope;
  Concept rest = g.gen(shape.max_depth == 0 ? 0 : shape.max_depth - 1, scope, 0);
  Concept occurrence = positive ? Concept::var(x) : Concept::negation(Concept::var(x));
  return coin(rng, 0.5) ? Concept::disj(rest, occurrence) : Concept::conj(occurrence, rest);
}

ElementSet random_subset(Rng& rng, std::size_t universe) {
  ElementSet s(universe);
  for (std::size_t e = 0; e < universe; ++e)
    if (coin(rng, 0.5)) s.insert(e);
  return s;
}

Interpretation random_interpretation(Rng& rng, std::size_t size, const Signature& sig, double density) {
  Interpretation i = Interpretation::canonical(size);
  for (const auto& c : sig.concepts) {
    ElementSet ext(size);
    for (std::size_t e = 0; e < size; ++e)
      if (coin(rng, density)) ext.insert(e);
    i.set_concept(c, std::move(ext));
  }
  for (const auto& r : sig.roles) {
    Relation rel(size);
    for (std::size_t a = 0; a < size; ++a)
      for (std::size_t b = 0; b < size; ++b)
        if (coin(rng, density)) rel.insert(a, b);
    i.set_role(r, std::move(rel));
  }
  return i;
}

Valuation random_valuation(Rng& rng, const Interpretation& i, const std::vector<std::string>& vars) {
  Valuation rho;
  for (const auto& v : vars) rho.insert_or_assign(v, random_subset(rng, i.size()));
  return rho;
}

Interpretation random_tree(Rng& rng, std::size_t max_depth, std::size_t branching, const Signature& sig,
                           double density) {
  struct Edge {
    std::size_t parent;
    std::string role;
  };
  std::vector<std::size_t> depth{0};
  std::vector<Edge> edges{{0, {}}};
  for (std::size_t k = 0; k < depth.size(); ++k) {
    if (depth[k] >= max_depth || sig.roles.empty()) continue;
    auto children = std::uniform_int_distribution<std::size_t>(0, branching)(rng);
    for (std::size_t c = 0; c < children; ++c) {
      depth.push_back(depth[k] + 1);
      edges.push_back({k, pick(rng, sig.roles)});
    }
  }
  std::vector<std::string> names;
  for (std::size_t k = 0; k < depth.size(); ++k) names.push_back("t" + std::to_string(k + 1));
  Interpretation i(std::move(names));
  for (const auto& c : sig.concepts) {
    ElementSet ext(i.size());
    for (std::size_t e = 0; e < i.size(); ++e)
      if (coin(rng, density)) ext.insert(e);
    i.set_concept(c, std::move(ext));
  }
  for (const auto& r : sig.roles) i.declare_role(r);
  for (std::size_t k = 1; k < edges.size(); ++k) i.add_edge(edges[k].role, edges[k].parent, k);
  return i;
}

}  // namespace mualcq
