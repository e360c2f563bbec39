#include "mualcq/translate.hpp"

#include "mualcq/errors.hpp"
#include "mualcq/evaluate.hpp"
#include "mualcq/syntax.hpp"

namespace mualcq {

namespace {

MuFormula q(const Concept& c) {
  switch (c.kind()) {
    case ConceptKind::Atomic: return MuFormula::atom(c.name());
    case ConceptKind::Var: return MuFormula::var(c.name());
    case ConceptKind::Top: return MuFormula::top();
    case ConceptKind::Bot: return MuFormula::bot();
    case ConceptKind::Not: return MuFormula::negation(q(c.child()));
    case ConceptKind::And: return MuFormula::conj(q(c.lhs()), q(c.rhs()));
    case ConceptKind::Or: return MuFormula::disj(q(c.lhs()), q(c.rhs()));
    case ConceptKind::Exists: return MuFormula::diamond(c.role(), q(c.child()));
    case ConceptKind::Forall: return MuFormula::box(c.role(), q(c.child()));
    case ConceptKind::AtMost:
    case ConceptKind::AtLeast:
      throw NumberRestrictionPresent("number restriction on role " + c.role() +
                                     " has no counterpart in the plain mu-calculus; use the deterministic target");
    case ConceptKind::Mu:
    case ConceptKind::Nu: return MuFormula::fixpoint(c.fixpoint_kind(), c.name(), q(c.body()));
  }
  throw InternalError("unhandled concept kind");
}

class UTranslator {
 public:
  UTranslator(std::map<std::string, std::string> fresh, std::set<std::string> taken)
      : fresh_(std::move(fresh)), taken_(std::move(taken)) {}

  MuFormula run(const Concept& c) {
    switch (c.kind()) {
      case ConceptKind::Atomic: return MuFormula::atom(c.name());
      case ConceptKind::Var: return MuFormula::var(c.name());
      case ConceptKind::Top: return MuFormula::top();
      case ConceptKind::Bot: return MuFormula::bot();
      case ConceptKind::Not: return MuFormula::negation(run(c.child()));
      case ConceptKind::And: return MuFormula::conj(run(c.lhs()), run(c.rhs()));
      case ConceptKind::Or: return MuFormula::disj(run(c.lhs()), run(c.rhs()));
      case ConceptKind::Mu:
      case ConceptKind::Nu: return MuFormula::fixpoint(c.fixpoint_kind(), c.name(), run(c.body()));
      case ConceptKind::Exists: {
        const auto& r = c.role();
        return MuFormula::diamond(r, diamond_star(fresh_.at(r), run(c.child()), binder()));
      }
      case ConceptKind::Forall: {
        const auto& r = c.role();
        return MuFormula::box(r, box_star(fresh_.at(r), run(c.child()), binder()));
      }
      case ConceptKind::AtMost: {
        const auto& next = fresh_.at(c.role());
        MuFormula inner = run(c.child());
        MuFormula nest = MuFormula::negation(inner);
        for (std::uint32_t k = 0; k < c.number(); ++k)
          nest = MuFormula::disj(MuFormula::negation(inner),
                                 MuFormula::box(next, box_star(next, nest, binder())));
        return MuFormula::box(c.role(), box_star(next, nest, binder()));
      }
      case ConceptKind::AtLeast: {
        if (c.number() == 0) return MuFormula::top();
        const auto& next = fresh_.at(c.role());
        MuFormula inner = run(c.child());
        MuFormula nest = inner;
        for (std::uint32_t k = 1; k < c.number(); ++k)
          nest = MuFormula::conj(inner, MuFormula::diamond(next, diamond_star(next, nest, binder())));
        return MuFormula::diamond(c.role(), diamond_star(next, nest, binder()));
      }
    }
    throw InternalError("unhandled concept kind");
  }

 private:
  std::string binder() {
    std::string z = fresh_name("Z", taken_);
    taken_.insert(z);
    return z;
  }

  std::map<std::string, std::string> fresh_;
  std::set<std::string> taken_;
};

}  // namespace

MuFormula translate_q(const Concept& c) { return q(c); }

KripkeStructure kripke_of_interpretation(const Interpretation& i) {
  KripkeStructure m(i.domain());
  for (const auto& [name, ext] : i.concepts()) m.set_atom(name, ext);
  for (const auto& [name, rel] : i.roles()) m.set_relation(name, rel);
  return m;
}

Interpretation interpretation_of_kripke(const KripkeStructure& m) {
  Interpretation i(m.states());
  for (const auto& [name, ext] : m.valuation()) i.set_concept(name, ext);
  for (const auto& [name, rel] : m.relations()) i.set_role(name, rel);
  return i;
}

std::map<std::string, std::string> fresh_role_names(const std::set<std::string>& roles,
                                                    const std::set<std::string>& taken) {
  std::set<std::string> avoid = taken;
  avoid.insert(roles.begin(), roles.end());
  std::map<std::string, std::string> out;
  for (const auto& r : roles) {
    std::string name = fresh_name(r + "_new", avoid);
    avoid.insert(name);
    out.emplace(r, std::move(name));
  }
  return out;
}

MuFormula box_star(const std::string& label, MuFormula f, const std::string& z) {
  return MuFormula::nu(z, MuFormula::conj(std::move(f), MuFormula::box(label, MuFormula::var(z))));
}

MuFormula diamond_star(const std::string& label, MuFormula f, const std::string& z) {
  return MuFormula::mu(z, MuFormula::disj(std::move(f), MuFormula::diamond(label, MuFormula::var(z))));
}

TranslationResult translate_u(const Concept& c) {
  std::set<std::string> taken = all_names(c);
  auto fresh = fresh_role_names(roles_of(c), taken);
  for (const auto& [r, name] : fresh) taken.insert(name);
  UTranslator t(fresh, taken);
  return TranslationResult{t.run(c), fresh};
}

ChainedTree chain_tree_model(const Interpretation& i, std::size_t root,
                             const std::map<std::string, std::string>& fresh) {
  ElementSet keep = reachable_from(i, root);
  std::vector<std::size_t> incoming(i.size(), 0);
  for (const auto& [name, rel] : i.roles())
    for (auto [a, b] : rel.pairs())
      if (keep.contains(a)) ++incoming[b];
  if (incoming[root] != 0)
    throw NotATree("root " + i.name_of(root) + " has an incoming edge, so the generated part has a cycle");
  for (auto e : keep.elements())
    if (e != root && incoming[e] != 1)
      throw NotATree("element " + i.name_of(e) + " has " + std::to_string(incoming[e]) + " incoming edges");

  std::map<std::string, std::string> labels = fresh;
  std::set<std::string> missing;
  std::set<std::string> taken;
  for (const auto& [name, ext] : i.concepts()) taken.insert(name);
  for (const auto& [name, rel] : i.roles()) {
    taken.insert(name);
    if (!labels.contains(name)) missing.insert(name);
  }
  for (const auto& [r, name] : fresh) taken.insert(name);
  labels.merge(fresh_role_names(missing, taken));

  std::vector<std::size_t> old_of_new = keep.elements();
  std::vector<std::size_t> new_of_old(i.size(), i.size());
  std::vector<std::string> names;
  for (std::size_t k = 0; k < old_of_new.size(); ++k) {
    new_of_old[old_of_new[k]] = k;
    names.push_back(i.name_of(old_of_new[k]));
  }

  KripkeStructure m(std::move(names));
  for (const auto& [name, ext] : i.concepts()) {
    m.declare_atom(name);
    for (std::size_t k = 0; k < old_of_new.size(); ++k)
      if (ext.contains(old_of_new[k])) m.add_to_atom(name, k);
  }
  for (const auto& [name, rel] : i.roles()) {
    const std::string& next = labels.at(name);
    m.declare_label(name);
    m.declare_label(next);
    for (auto x : old_of_new) {
      auto children = rel.successors(x).elements();
      if (children.empty()) continue;
      m.add_edge(name, new_of_old[x], new_of_old[children.front()]);
      for (std::size_t k = 1; k < children.size(); ++k)
        m.add_edge(next, new_of_old[children[k - 1]], new_of_old[children[k]]);
    }
  }
  return ChainedTree{std::move(m), std::move(old_of_new)};
}

Interpretation collapse_chains(const KripkeStructure& m, const std::map<std::string, std::string>& fresh) {
  std::set<std::string> chain_labels;
  for (const auto& [r, name] : fresh) chain_labels.insert(name);
  Interpretation out(m.states());
  for (const auto& [name, ext] : m.valuation()) out.set_concept(name, ext);
  const std::size_t n = m.size();
  for (const auto& [label, rel] : m.relations()) {
    if (chain_labels.contains(label)) continue;
    auto it = fresh.find(label);
    if (it == fresh.end()) {
      out.set_role(label, rel);
      continue;
    }
    const Relation* next = m.relation(it->second);
    Relation composed(n);
    for (std::size_t x = 0; x < n; ++x) {
      ElementSet frontier = rel.successors(x);
      ElementSet seen = frontier;
      while (!frontier.empty() && next != nullptr) {
        ElementSet step(n);
        for (auto z : frontier.elements()) step |= next->successors(z);
        step -= seen;
        seen |= step;
        frontier = std::move(step);
      }
      for (auto z : seen.elements()) composed.insert(x, z);
    }
    out.set_role(label, std::move(composed));
  }
  for (const auto& [r, name] : fresh)
    if (out.role_extension(r) == nullptr) out.declare_role(r);
  return out;
}

}  // namespace mualcq
