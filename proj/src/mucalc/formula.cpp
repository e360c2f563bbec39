#include <sstream>

#include "mualcq/errors.hpp"
#include "mualcq/fixpoint.hpp"
#include "mualcq/model_io.hpp"
#include "mualcq/mucalc.hpp"

namespace mualcq {

MuFormula MuFormula::make(MuKind k, std::string name, std::string label, const MuFormula* first,
                          const MuFormula* second) {
  auto node = std::make_shared<Node>();
  node->kind = k;
  node->name = std::move(name);
  node->label = std::move(label);
  if (first != nullptr) node->first = std::make_unique<MuFormula>(*first);
  if (second != nullptr) node->second = std::make_unique<MuFormula>(*second);
  return MuFormula(std::move(node));
}

MuFormula MuFormula::atom(std::string name) { return make(MuKind::Atom, std::move(name), {}, nullptr, nullptr); }
MuFormula MuFormula::var(std::string name) { return make(MuKind::Var, std::move(name), {}, nullptr, nullptr); }
MuFormula MuFormula::top() { return make(MuKind::Top, {}, {}, nullptr, nullptr); }
MuFormula MuFormula::bot() { return make(MuKind::Bot, {}, {}, nullptr, nullptr); }
MuFormula MuFormula::negation(MuFormula f) { return make(MuKind::Not, {}, {}, &f, nullptr); }
MuFormula MuFormula::conj(MuFormula a, MuFormula b) { return make(MuKind::And, {}, {}, &a, &b); }
MuFormula MuFormula::disj(MuFormula a, MuFormula b) { return make(MuKind::Or, {}, {}, &a, &b); }
MuFormula MuFormula::diamond(std::string label, MuFormula f) {
  return make(MuKind::Diamond, {}, std::move(label), &f, nullptr);
}
MuFormula MuFormula::box(std::string label, MuFormula f) { return make(MuKind::Box, {}, std::move(label), &f, nullptr); }
MuFormula MuFormula::mu(std::string var, MuFormula body) { return make(MuKind::Mu, std::move(var), {}, &body, nullptr); }
MuFormula MuFormula::nu(std::string var, MuFormula body) { return make(MuKind::Nu, std::move(var), {}, &body, nullptr); }
MuFormula MuFormula::fixpoint(FixpointKind kind, std::string var, MuFormula body) {
  return kind == FixpointKind::Least ? mu(std::move(var), std::move(body)) : nu(std::move(var), std::move(body));
}

std::size_t MuFormula::size() const noexcept {
  std::size_t n = 1;
  if (node_->first) n += node_->first->size();
  if (node_->second) n += node_->second->size();
  return n;
}

bool operator==(const MuFormula& a, const MuFormula& b) {
  if (a.node_ == b.node_) return true;
  const auto& x = *a.node_;
  const auto& y = *b.node_;
  if (x.kind != y.kind || x.name != y.name || x.label != y.label) return false;
  if (static_cast<bool>(x.first) != static_cast<bool>(y.first)) return false;
  if (x.first && !(*x.first == *y.first)) return false;
  if (static_cast<bool>(x.second) != static_cast<bool>(y.second)) return false;
  return !x.second || *x.second == *y.second;
}

namespace {

bool is_leaf(const MuFormula& f) {
  auto k = f.kind();
  return k == MuKind::Atom || k == MuKind::Var || k == MuKind::Top || k == MuKind::Bot;
}
bool is_binary(const MuFormula& f) { return f.kind() == MuKind::And || f.kind() == MuKind::Or; }

template <typename F>
void visit(const MuFormula& f, F&& fn) {
  fn(f);
  if (is_leaf(f)) return;
  visit(f.child(), fn);
  if (is_binary(f)) visit(f.rhs(), fn);
}

void collect_free(const MuFormula& f, std::set<std::string>& bound, std::set<std::string>& out) {
  if (f.kind() == MuKind::Var) {
    if (!bound.contains(f.name())) out.insert(f.name());
    return;
  }
  if (f.is_binder()) {
    bool inserted = bound.insert(f.name()).second;
    collect_free(f.body(), bound, out);
    if (inserted) bound.erase(f.name());
    return;
  }
  if (is_leaf(f)) return;
  collect_free(f.child(), bound, out);
  if (is_binary(f)) collect_free(f.rhs(), bound, out);
}

void scan_polarity(const MuFormula& f, const std::string& x, int depth, bool& even, bool& odd) {
  switch (f.kind()) {
    case MuKind::Var:
      if (f.name() == x) (depth % 2 == 0 ? even : odd) = true;
      return;
    case MuKind::Mu:
    case MuKind::Nu:
      if (f.name() == x) return;
      scan_polarity(f.body(), x, depth, even, odd);
      return;
    case MuKind::Not: scan_polarity(f.child(), x, depth + 1, even, odd); return;
    default: break;
  }
  if (is_leaf(f)) return;
  scan_polarity(f.child(), x, depth, even, odd);
  if (is_binary(f)) scan_polarity(f.rhs(), x, depth, even, odd);
}

bool alpha_impl(const MuFormula& a, const MuFormula& b, std::map<std::string, int>& env_a,
                std::map<std::string, int>& env_b, int depth) {
  if (a.kind() != b.kind()) return false;
  switch (a.kind()) {
    case MuKind::Var: {
      auto ia = env_a.find(a.name());
      auto ib = env_b.find(b.name());
      if ((ia == env_a.end()) != (ib == env_b.end())) return false;
      return ia != env_a.end() ? ia->second == ib->second : a.name() == b.name();
    }
    case MuKind::Atom: return a.name() == b.name();
    case MuKind::Top:
    case MuKind::Bot: return true;
    case MuKind::Mu:
    case MuKind::Nu: {
      auto save_a = env_a.contains(a.name()) ? std::optional<int>(env_a[a.name()]) : std::nullopt;
      auto save_b = env_b.contains(b.name()) ? std::optional<int>(env_b[b.name()]) : std::nullopt;
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
    default: break;
  }
  if (a.label() != b.label()) return false;
  if (!alpha_impl(a.child(), b.child(), env_a, env_b, depth)) return false;
  return !is_binary(a) || alpha_impl(a.rhs(), b.rhs(), env_a, env_b, depth);
}

enum Level { kOr = 0, kAnd = 1, kUnary = 2 };

void print(const MuFormula& f, int level, bool rightmost, std::ostream& out) {
  switch (f.kind()) {
    case MuKind::Atom:
    case MuKind::Var: out << f.name(); return;
    case MuKind::Top: out << "true"; return;
    case MuKind::Bot: out << "false"; return;
    case MuKind::Not:
      out << '~';
      print(f.child(), kUnary, rightmost, out);
      return;
    case MuKind::Diamond:
    case MuKind::Box:
      out << (f.kind() == MuKind::Diamond ? "<" : "[") << f.label() << (f.kind() == MuKind::Diamond ? ">" : "]");
      print(f.child(), kUnary, rightmost, out);
      return;
    case MuKind::And:
    case MuKind::Or: {
      int mine = f.kind() == MuKind::And ? kAnd : kOr;
      bool paren = level > mine;
      if (paren) out << '(';
      bool right = paren || rightmost;
      print(f.lhs(), mine, false, out);
      out << (mine == kAnd ? " & " : " | ");
      print(f.rhs(), mine + 1, right, out);
      if (paren) out << ')';
      return;
    }
    case MuKind::Mu:
    case MuKind::Nu: {
      bool paren = !rightmost;
      if (paren) out << '(';
      out << (f.kind() == MuKind::Mu ? "mu " : "nu ") << f.name() << ". ";
      print(f.body(), kOr, true, out);
      if (paren) out << ')';
      return;
    }
  }
}

class Evaluator {
 public:
  Evaluator(const KripkeStructure& m, Valuation env) : m_(m), env_(std::move(env)), n_(m.size()) {}

  ElementSet eval(const MuFormula& f) {
    switch (f.kind()) {
      case MuKind::Atom: {
        const auto* ext = m_.atom(f.name());
        return ext != nullptr ? *ext : ElementSet(n_);
      }
      case MuKind::Var: {
        auto it = env_.find(f.name());
        if (it == env_.end()) throw UnboundVariable("no value for variable " + f.name());
        return it->second;
      }
      case MuKind::Top: return ElementSet::full(n_);
      case MuKind::Bot: return ElementSet(n_);
      case MuKind::Not: return eval(f.child()).complement();
      case MuKind::And: {
        ElementSet a = eval(f.lhs());
        return a &= eval(f.rhs());
      }
      case MuKind::Or: {
        ElementSet a = eval(f.lhs());
        return a |= eval(f.rhs());
      }
      case MuKind::Diamond:
      case MuKind::Box: {
        ElementSet target = eval(f.child());
        const Relation* r = m_.relation(f.label());
        ElementSet out(n_);
        for (std::size_t s = 0; s < n_; ++s) {
          bool member = f.kind() == MuKind::Diamond ? r != nullptr && r->successors(s).intersects(target)
                                                    : r == nullptr || r->successors(s).subset_of(target);
          if (member) out.insert(s);
        }
        return out;
      }
      case MuKind::Mu:
      case MuKind::Nu: {
        const std::string& x = f.name();
        auto saved = env_.contains(x) ? std::optional<ElementSet>(env_.at(x)) : std::nullopt;
        ElementSet result = iterate_fixpoint(f.fixpoint_kind(), n_, [&](const ElementSet& e) {
          env_.insert_or_assign(x, e);
          return eval(f.body());
        });
        if (saved)
          env_.insert_or_assign(x, *saved);
        else
          env_.erase(x);
        return result;
      }
    }
    return ElementSet(n_);
  }

 private:
  const KripkeStructure& m_;
  Valuation env_;
  std::size_t n_;
};

}  // namespace

std::set<std::string> free_variables(const MuFormula& f) {
  std::set<std::string> bound;
  std::set<std::string> out;
  collect_free(f, bound, out);
  return out;
}

std::set<std::string> labels_of(const MuFormula& f) {
  std::set<std::string> out;
  visit(f, [&](const MuFormula& g) {
    if (g.kind() == MuKind::Diamond || g.kind() == MuKind::Box) out.insert(g.label());
  });
  return out;
}

std::set<std::string> atoms_of(const MuFormula& f) {
  std::set<std::string> out;
  visit(f, [&](const MuFormula& g) {
    if (g.kind() == MuKind::Atom) out.insert(g.name());
  });
  return out;
}

Polarity polarity_of(const MuFormula& f, const std::string& x) {
  bool even = false;
  bool odd = false;
  scan_polarity(f, x, 0, even, odd);
  if (even && odd) return Polarity::Both;
  if (even) return Polarity::Positive;
  if (odd) return Polarity::Negative;
  return Polarity::Absent;
}

void check_well_formed(const MuFormula& f) {
  visit(f, [](const MuFormula& g) {
    if (!g.is_binder()) return;
    auto p = polarity_of(g.body(), g.name());
    if (p != Polarity::Positive && p != Polarity::Absent)
      throw WellFormednessError("variable " + g.name() + " occurs " + to_string(p) + "ly under its binder in " +
                                print_formula(g));
  });
}

bool is_well_formed(const MuFormula& f) {
  try {
    check_well_formed(f);
    return true;
  } catch (const WellFormednessError&) {
    return false;
  }
}

bool alpha_equivalent(const MuFormula& a, const MuFormula& b) {
  std::map<std::string, int> env_a;
  std::map<std::string, int> env_b;
  return alpha_impl(a, b, env_a, env_b, 0);
}

std::string print_formula(const MuFormula& f) {
  std::ostringstream out;
  print(f, kOr, true, out);
  return out.str();
}

KripkeStructure::KripkeStructure(std::vector<std::string> states) : states_(std::move(states)) {
  if (states_.empty()) throw ModelFormatError("a Kripke structure needs at least one state");
  std::set<std::string> seen;
  for (const auto& s : states_)
    if (!seen.insert(s).second) throw ModelFormatError("state '" + s + "' listed twice");
}

std::optional<std::size_t> KripkeStructure::index_of(std::string_view name) const {
  for (std::size_t i = 0; i < states_.size(); ++i)
    if (states_[i] == name) return i;
  return std::nullopt;
}

void KripkeStructure::declare_label(const std::string& label) { relations_.try_emplace(label, Relation(size())); }

void KripkeStructure::add_edge(const std::string& label, std::size_t from, std::size_t to) {
  declare_label(label);
  relations_.at(label).insert(from, to);
}

void KripkeStructure::set_relation(const std::string& label, Relation r) {
  relations_.insert_or_assign(label, std::move(r));
}

void KripkeStructure::declare_atom(const std::string& atom) { valuation_.try_emplace(atom, ElementSet(size())); }

void KripkeStructure::add_to_atom(const std::string& atom, std::size_t state) {
  declare_atom(atom);
  valuation_.at(atom).insert(state);
}

void KripkeStructure::set_atom(const std::string& atom, ElementSet ext) {
  valuation_.insert_or_assign(atom, std::move(ext));
}

const Relation* KripkeStructure::relation(const std::string& label) const {
  auto it = relations_.find(label);
  return it == relations_.end() ? nullptr : &it->second;
}

const ElementSet* KripkeStructure::atom(const std::string& name) const {
  auto it = valuation_.find(name);
  return it == valuation_.end() ? nullptr : &it->second;
}

KripkeStructure parse_kripke(std::string_view text) {
  ModelText t = parse_model_text(text, "label");
  KripkeStructure m(t.domain);
  auto index = [&](const std::string& name) {
    auto idx = m.index_of(name);
    if (!idx) throw ModelFormatError("'" + name + "' is not a state");
    return *idx;
  };
  for (const auto& [name, states] : t.sets) {
    m.declare_atom(name);
    for (const auto& s : states) m.add_to_atom(name, index(s));
  }
  for (const auto& [label, pairs] : t.relations) {
    m.declare_label(label);
    for (const auto& [a, b] : pairs) m.add_edge(label, index(a), index(b));
  }
  return m;
}

std::string print_kripke(const KripkeStructure& m) {
  ModelText t;
  t.domain = m.states();
  for (const auto& [name, ext] : m.valuation())
    for (auto s : ext.elements()) t.sets[name].push_back(m.name_of(s));
  for (const auto& [name, ext] : m.valuation()) t.sets.try_emplace(name);
  for (const auto& [label, rel] : m.relations()) {
    auto& out = t.relations[label];
    for (auto [a, b] : rel.pairs()) out.emplace_back(m.name_of(a), m.name_of(b));
  }
  return format_model_text(t, "label");
}

ElementSet eval_mu(const MuFormula& f, const KripkeStructure& m, const Valuation& rho) {
  for (const auto& [name, set] : rho)
    if (set.universe() != m.size()) throw std::invalid_argument("valuation of " + name + " has the wrong universe");
  return Evaluator(m, rho).eval(f);
}

std::optional<DeterminismViolation> check_deterministic(const KripkeStructure& m) {
  for (const auto& [label, rel] : m.relations())
    for (std::size_t s = 0; s < m.size(); ++s)
      if (rel.successors(s).count() > 1) return DeterminismViolation{label, s, rel.successors(s)};
  return std::nullopt;
}

}  // namespace mualcq
