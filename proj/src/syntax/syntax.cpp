#include "mualcq/syntax.hpp"

#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "mualcq/errors.hpp"

namespace mualcq {

const char* to_string(Polarity p) noexcept {
  switch (p) {
    case Polarity::Positive: return "positive";
    case Polarity::Negative: return "negative";
    case Polarity::Both: return "both";
    case Polarity::Absent: return "absent";
  }
  return "?";
}

namespace {

void collect_free(const Concept& c, std::set<std::string>& bound, std::set<std::string>& out) {
  switch (c.kind()) {
    case ConceptKind::Var:
      if (!bound.contains(c.name())) out.insert(c.name());
      return;
    case ConceptKind::Mu:
    case ConceptKind::Nu: {
      bool inserted = bound.insert(c.name()).second;
      collect_free(c.body(), bound, out);
      if (inserted) bound.erase(c.name());
      return;
    }
    default:
      break;
  }
  if (c.is_leaf()) return;
  collect_free(c.child(), bound, out);
  if (c.is_binary()) collect_free(c.rhs(), bound, out);
}

template <typename F>
void visit(const Concept& c, F&& f) {
  f(c);
  if (c.is_leaf()) return;
  visit(c.child(), f);
  if (c.is_binary()) visit(c.rhs(), f);
}

Concept rebuild_unary(const Concept& c, Concept child) {
  switch (c.kind()) {
    case ConceptKind::Not: return Concept::negation(std::move(child));
    case ConceptKind::Exists: return Concept::exists(c.role(), std::move(child));
    case ConceptKind::Forall: return Concept::forall(c.role(), std::move(child));
    case ConceptKind::AtMost: return Concept::at_most(c.number(), c.role(), std::move(child));
    case ConceptKind::AtLeast: return Concept::at_least(c.number(), c.role(), std::move(child));
    case ConceptKind::Mu: return Concept::mu(c.name(), std::move(child));
    case ConceptKind::Nu: return Concept::nu(c.name(), std::move(child));
    default: return c;
  }
}

Concept substitute_impl(const Concept& c, const std::string& x, const Concept& d,
                        const std::set<std::string>& fv_d) {
  switch (c.kind()) {
    case ConceptKind::Var:
      return c.name() == x ? d : c;
    case ConceptKind::Atomic:
    case ConceptKind::Top:
    case ConceptKind::Bot:
      return c;
    case ConceptKind::And:
      return Concept::conj(substitute_impl(c.lhs(), x, d, fv_d), substitute_impl(c.rhs(), x, d, fv_d));
    case ConceptKind::Or:
      return Concept::disj(substitute_impl(c.lhs(), x, d, fv_d), substitute_impl(c.rhs(), x, d, fv_d));
    case ConceptKind::Mu:
    case ConceptKind::Nu: {
      if (c.name() == x) return c;
      if (!free_variables(c.body()).contains(x)) return c;
      if (fv_d.contains(c.name())) {
        std::set<std::string> avoid = all_names(c.body());
        avoid.insert(fv_d.begin(), fv_d.end());
        avoid.insert(x);
        std::string renamed = fresh_name(c.name(), avoid);
        Concept body = substitute_impl(c.body(), c.name(), Concept::var(renamed), {renamed});
        return Concept::fixpoint(c.fixpoint_kind(), renamed, substitute_impl(body, x, d, fv_d));
      }
      return rebuild_unary(c, substitute_impl(c.body(), x, d, fv_d));
    }
    default:
      return rebuild_unary(c, substitute_impl(c.child(), x, d, fv_d));
  }
}

struct PolarityScan {
  const std::string& x;
  bool even = false;
  bool odd = false;

  void run(const Concept& c, unsigned negations) {
    switch (c.kind()) {
      case ConceptKind::Var:
        if (c.name() == x) (negations % 2 == 0 ? even : odd) = true;
        return;
      case ConceptKind::Mu:
      case ConceptKind::Nu:
        if (c.name() == x) return;
        run(c.body(), negations);
        return;
      case ConceptKind::Not:
      case ConceptKind::AtMost:
        run(c.child(), negations + 1);
        return;
      default:
        break;
    }
    if (c.is_leaf()) return;
    run(c.child(), negations);
    if (c.is_binary()) run(c.rhs(), negations);
  }
};

std::string step_label(const Concept& c) {
  switch (c.kind()) {
    case ConceptKind::Not: return "not";
    case ConceptKind::And: return "and";
    case ConceptKind::Or: return "or";
    case ConceptKind::Exists: return "exists " + c.role();
    case ConceptKind::Forall: return "forall " + c.role();
    case ConceptKind::AtMost: return "atmost " + std::to_string(c.number()) + " " + c.role();
    case ConceptKind::AtLeast: return "atleast " + std::to_string(c.number()) + " " + c.role();
    case ConceptKind::Mu: return "mu " + c.name();
    case ConceptKind::Nu: return "nu " + c.name();
    default: return "?";
  }
}

// Path from the binder to an occurrence of x under an odd number of negations.
bool negative_witness(const Concept& c, const std::string& x, unsigned negations, std::vector<std::string>& path) {
  switch (c.kind()) {
    case ConceptKind::Var:
      if (c.name() == x && negations % 2 == 1) {
        path.push_back(x);
        return true;
      }
      return false;
    case ConceptKind::Mu:
    case ConceptKind::Nu:
      if (c.name() == x) return false;
      break;
    default:
      break;
  }
  if (c.is_leaf()) return false;
  path.push_back(step_label(c));
  unsigned inner = negations + ((c.kind() == ConceptKind::Not || c.kind() == ConceptKind::AtMost) ? 1 : 0);
  if (negative_witness(c.child(), x, inner, path)) return true;
  if (c.is_binary() && negative_witness(c.rhs(), x, inner, path)) return true;
  path.pop_back();
  return false;
}

bool alpha_impl(const Concept& a, const Concept& b, std::map<std::string, int>& env_a,
                std::map<std::string, int>& env_b, int depth) {
  if (a.kind() != b.kind()) return false;
  switch (a.kind()) {
    case ConceptKind::Var: {
      auto ia = env_a.find(a.name());
      auto ib = env_b.find(b.name());
      bool bound_a = ia != env_a.end();
      bool bound_b = ib != env_b.end();
      if (bound_a != bound_b) return false;
      return bound_a ? ia->second == ib->second : a.name() == b.name();
    }
    case ConceptKind::Atomic:
      return a.name() == b.name();
    case ConceptKind::Top:
    case ConceptKind::Bot:
      return true;
    case ConceptKind::Mu:
    case ConceptKind::Nu: {
      auto save_a = env_a.find(a.name()) != env_a.end() ? std::optional<int>(env_a[a.name()]) : std::nullopt;
      auto save_b = env_b.find(b.name()) != env_b.end() ? std::optional<int>(env_b[b.name()]) : std::nullopt;
      env_a[a.name()] = depth;
      env_b[b.name()] = depth;
      bool ok = alpha_impl(a.body(), b.body(), env_a, env_b, depth + 1);
      if (save_a)
        env_a[a.name()] = *save_a;
      else
        env_a.erase(a.name());
      if (save_b)
        env_b[b.name()] = *save_b;
      else
        env_b.erase(b.name());
      return ok;
    }
    default:
      break;
  }
  if (a.has_role() && (a.role() != b.role() || a.number() != b.number())) return false;
  if (!alpha_impl(a.child(), b.child(), env_a, env_b, depth)) return false;
  if (a.is_binary()) return alpha_impl(a.rhs(), b.rhs(), env_a, env_b, depth);
  return true;
}

}  // namespace

std::set<std::string> free_variables(const Concept& c) {
  std::set<std::string> bound;
  std::set<std::string> out;
  collect_free(c, bound, out);
  return out;
}

bool is_closed(const Concept& c) { return free_variables(c).empty(); }

std::set<std::string> atomic_concepts(const Concept& c) {
  std::set<std::string> out;
  visit(c, [&](const Concept& n) {
    if (n.kind() == ConceptKind::Atomic) out.insert(n.name());
  });
  return out;
}

std::set<std::string> roles_of(const Concept& c) {
  std::set<std::string> out;
  visit(c, [&](const Concept& n) {
    if (n.has_role()) out.insert(n.role());
  });
  return out;
}

std::set<std::string> all_names(const Concept& c) {
  std::set<std::string> out;
  visit(c, [&](const Concept& n) {
    if (n.has_role()) out.insert(n.role());
    if (!n.name().empty()) out.insert(n.name());
  });
  return out;
}

std::string fresh_name(const std::string& base, const std::set<std::string>& avoid) {
  if (!avoid.contains(base)) return base;
  for (std::size_t i = 1;; ++i) {
    std::string candidate = base + "_" + std::to_string(i);
    if (!avoid.contains(candidate)) return candidate;
  }
}

Concept substitute(const Concept& c, const std::string& x, const Concept& d) {
  return substitute_impl(c, x, d, free_variables(d));
}

Polarity polarity_of(const Concept& c, const std::string& x) {
  PolarityScan scan{x};
  scan.run(c, 0);
  if (scan.even && scan.odd) return Polarity::Both;
  if (scan.even) return Polarity::Positive;
  if (scan.odd) return Polarity::Negative;
  return Polarity::Absent;
}

void check_well_formed(const Concept& c) {
  visit(c, [](const Concept& n) {
    if (!n.is_binder()) return;
    auto p = polarity_of(n.body(), n.name());
    if (p == Polarity::Positive || p == Polarity::Absent) return;
    std::vector<std::string> path{step_label(n)};
    negative_witness(n.body(), n.name(), 0, path);
    std::string witness;
    for (const auto& step : path) witness += (witness.empty() ? "" : " > ") + step;
    throw WellFormednessError("variable " + n.name() + " occurs " + to_string(p) + "ly under its binder (path: " +
                              witness + ")");
  });
}

bool is_well_formed(const Concept& c) {
  try {
    check_well_formed(c);
    return true;
  } catch (const WellFormednessError&) {
    return false;
  }
}

Concept dual_fixpoint(const Concept& c) {
  if (!c.is_binder()) throw NotAFixpoint("dual_fixpoint expects a mu or nu concept at the root");
  const auto& x = c.name();
  Concept flipped = substitute(c.body(), x, Concept::negation(Concept::var(x)));
  FixpointKind other = c.kind() == ConceptKind::Mu ? FixpointKind::Greatest : FixpointKind::Least;
  return Concept::negation(Concept::fixpoint(other, x, Concept::negation(flipped)));
}

bool alpha_equivalent(const Concept& a, const Concept& b) {
  std::map<std::string, int> env_a;
  std::map<std::string, int> env_b;
  return alpha_impl(a, b, env_a, env_b, 0);
}

}  // namespace mualcq
