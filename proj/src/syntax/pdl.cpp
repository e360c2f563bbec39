#include "mualcq/pdl.hpp"

#include <set>
#include <utility>

#include "mualcq/errors.hpp"
#include "mualcq/syntax.hpp"

namespace mualcq {

RoleExprPtr RoleExpr::atomic(std::string name) {
  auto r = std::make_shared<RoleExpr>();
  r->kind = RoleKind::Atomic;
  r->name = std::move(name);
  return r;
}
RoleExprPtr RoleExpr::chain(RoleExprPtr a, RoleExprPtr b) {
  auto r = std::make_shared<RoleExpr>();
  r->kind = RoleKind::Chain;
  r->left = std::move(a);
  r->right = std::move(b);
  return r;
}
RoleExprPtr RoleExpr::alt(RoleExprPtr a, RoleExprPtr b) {
  auto r = std::make_shared<RoleExpr>();
  r->kind = RoleKind::Union;
  r->left = std::move(a);
  r->right = std::move(b);
  return r;
}
RoleExprPtr RoleExpr::star(RoleExprPtr inner) {
  auto r = std::make_shared<RoleExpr>();
  r->kind = RoleKind::Star;
  r->left = std::move(inner);
  return r;
}
RoleExprPtr RoleExpr::id_test(ExtConceptPtr c) {
  auto r = std::make_shared<RoleExpr>();
  r->kind = RoleKind::IdTest;
  r->test = std::move(c);
  return r;
}
RoleExprPtr RoleExpr::inverse(RoleExprPtr inner) {
  auto r = std::make_shared<RoleExpr>();
  r->kind = RoleKind::Inverse;
  r->left = std::move(inner);
  return r;
}

namespace {

void collect_names(const ExtConcept& c, std::set<std::string>& out);

void collect_role_names(const RoleExpr& r, std::set<std::string>& out) {
  if (r.kind == RoleKind::Atomic) out.insert(r.name);
  if (r.left) collect_role_names(*r.left, out);
  if (r.right) collect_role_names(*r.right, out);
  if (r.test) collect_names(*r.test, out);
}

void collect_names(const ExtConcept& c, std::set<std::string>& out) {
  if (!c.name.empty()) out.insert(c.name);
  if (c.role) collect_role_names(*c.role, out);
  if (c.first) collect_names(*c.first, out);
  if (c.second) collect_names(*c.second, out);
}

class Desugarer {
 public:
  explicit Desugarer(std::set<std::string> taken) : taken_(std::move(taken)) {}

  Concept run(const ExtConcept& c) {
    switch (c.kind) {
      case ExtKind::Atomic: return Concept::atomic(c.name);
      case ExtKind::Var: return Concept::var(c.name);
      case ExtKind::Top: return Concept::top();
      case ExtKind::Bot: return Concept::bot();
      case ExtKind::Not: return Concept::negation(run(*c.first));
      case ExtKind::And: return Concept::conj(run(*c.first), run(*c.second));
      case ExtKind::Or: return Concept::disj(run(*c.first), run(*c.second));
      case ExtKind::Exists: return exists(*c.role, run(*c.first));
      case ExtKind::Forall: return forall(*c.role, run(*c.first));
      case ExtKind::AtMost: return Concept::at_most(c.number, atomic_role(*c.role, "atmost"), run(*c.first));
      case ExtKind::AtLeast: return Concept::at_least(c.number, atomic_role(*c.role, "atleast"), run(*c.first));
      case ExtKind::Mu: return Concept::mu(c.name, run(*c.first));
      case ExtKind::Nu: return Concept::nu(c.name, run(*c.first));
      case ExtKind::Wf: {
        std::string x = fresh();
        return Concept::mu(x, forall(*c.role, Concept::var(x)));
      }
    }
    return Concept::top();
  }

 private:
  std::string fresh() {
    std::string x = fresh_name("X", taken_);
    taken_.insert(x);
    return x;
  }

  static std::string atomic_role(const RoleExpr& r, const char* what) {
    if (r.kind == RoleKind::Inverse) throw InverseRoleUnsupported("inverse roles are not supported");
    if (r.kind != RoleKind::Atomic)
      throw UnsupportedRole(std::string(what) + " restriction requires an atomic role");
    return r.name;
  }

  Concept exists(const RoleExpr& r, const Concept& c) {
    switch (r.kind) {
      case RoleKind::Atomic: return Concept::exists(r.name, c);
      case RoleKind::Chain: return exists(*r.left, exists(*r.right, c));
      case RoleKind::Union: return Concept::disj(exists(*r.left, c), exists(*r.right, c));
      case RoleKind::Star: {
        std::string x = fresh();
        return Concept::mu(x, Concept::disj(c, exists(*r.left, Concept::var(x))));
      }
      case RoleKind::IdTest: return Concept::conj(c, run(*r.test));
      case RoleKind::Inverse: throw InverseRoleUnsupported("inverse roles are not supported");
    }
    return c;
  }

  Concept forall(const RoleExpr& r, const Concept& c) {
    switch (r.kind) {
      case RoleKind::Atomic: return Concept::forall(r.name, c);
      case RoleKind::Chain: return forall(*r.left, forall(*r.right, c));
      case RoleKind::Union: return Concept::conj(forall(*r.left, c), forall(*r.right, c));
      case RoleKind::Star: {
        std::string x = fresh();
        return Concept::nu(x, Concept::conj(c, forall(*r.left, Concept::var(x))));
      }
      case RoleKind::IdTest: return Concept::disj(Concept::negation(run(*r.test)), c);
      case RoleKind::Inverse: throw InverseRoleUnsupported("inverse roles are not supported");
    }
    return c;
  }

  std::set<std::string> taken_;
};

}  // namespace

Concept desugar_pdl(const ExtConcept& c) {
  std::set<std::string> taken;
  collect_names(c, taken);
  return Desugarer(std::move(taken)).run(c);
}

}  // namespace mualcq
