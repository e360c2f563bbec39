#include "mualcq/search.hpp"

#include <algorithm>
#include <map>
#include <set>

#include "mualcq/enumerate.hpp"
#include "mualcq/errors.hpp"
#include "mualcq/evaluate.hpp"
#include "mualcq/parser.hpp"
#include "mualcq/syntax.hpp"

namespace mualcq {

namespace {

std::set<std::string> symbols_of(const Concept& c) {
  auto out = atomic_concepts(c);
  out.merge(roles_of(c));
  return out;
}

struct Interval {
  ElementSet lo;
  ElementSet hi;
  friend bool operator==(const Interval&, const Interval&) = default;
};

struct Op {
  ConceptKind kind;
  int a = -1;
  int b = -1;
  int sym = -1;
  std::uint32_t n = 0;
  int slot = -1;
};

struct State {
  std::size_t n = 0;
  std::vector<ElementSet> clo, chi;
  std::vector<Relation> rlo, rhi;
};

class Program {
 public:
  Program(const std::map<std::string, int>& concepts, const std::map<std::string, int>& roles)
      : concepts_(concepts), roles_(roles) {}

  int compile(const Concept& c) {
    std::map<std::string, int> scope;
    return compile(c, scope);
  }

  Interval eval(int root, const State& s) {
    env_.assign(slots_, Interval{});
    return eval_op(root, s);
  }

 private:
  int compile(const Concept& c, std::map<std::string, int>& scope) {
    Op op{c.kind()};
    switch (c.kind()) {
      case ConceptKind::Atomic: {
        auto it = concepts_.find(c.name());
        op.sym = it == concepts_.end() ? -1 : it->second;
        break;
      }
      case ConceptKind::Var: {
        auto it = scope.find(c.name());
        if (it == scope.end()) throw ClosednessError("free variable " + c.name() + " in search input");
        op.slot = it->second;
        break;
      }
      case ConceptKind::Top:
      case ConceptKind::Bot: break;
      case ConceptKind::Not: op.a = compile(c.child(), scope); break;
      case ConceptKind::And:
      case ConceptKind::Or:
        op.a = compile(c.lhs(), scope);
        op.b = compile(c.rhs(), scope);
        break;
      case ConceptKind::Exists:
      case ConceptKind::Forall:
      case ConceptKind::AtMost:
      case ConceptKind::AtLeast: {
        auto it = roles_.find(c.role());
        op.sym = it == roles_.end() ? -1 : it->second;
        op.n = c.number();
        op.a = compile(c.child(), scope);
        break;
      }
      case ConceptKind::Mu:
      case ConceptKind::Nu: {
        op.slot = slots_++;
        auto saved = scope.find(c.name()) != scope.end() ? std::optional<int>(scope[c.name()]) : std::nullopt;
        scope[c.name()] = op.slot;
        op.a = compile(c.body(), scope);
        if (saved)
          scope[c.name()] = *saved;
        else
          scope.erase(c.name());
        break;
      }
    }
    ops_.push_back(op);
    return static_cast<int>(ops_.size() - 1);
  }

  Interval eval_op(int idx, const State& s) {
    const Op& op = ops_[static_cast<std::size_t>(idx)];
    const std::size_t n = s.n;
    switch (op.kind) {
      case ConceptKind::Atomic:
        if (op.sym < 0) return {ElementSet(n), ElementSet(n)};
        return {s.clo[static_cast<std::size_t>(op.sym)], s.chi[static_cast<std::size_t>(op.sym)]};
      case ConceptKind::Var: return env_[static_cast<std::size_t>(op.slot)];
      case ConceptKind::Top: return {ElementSet::full(n), ElementSet::full(n)};
      case ConceptKind::Bot: return {ElementSet(n), ElementSet(n)};
      case ConceptKind::Not: {
        Interval x = eval_op(op.a, s);
        return {x.hi.complement(), x.lo.complement()};
      }
      case ConceptKind::And: {
        Interval x = eval_op(op.a, s);
        Interval y = eval_op(op.b, s);
        return {x.lo & y.lo, x.hi & y.hi};
      }
      case ConceptKind::Or: {
        Interval x = eval_op(op.a, s);
        Interval y = eval_op(op.b, s);
        return {x.lo | y.lo, x.hi | y.hi};
      }
      case ConceptKind::Exists:
      case ConceptKind::Forall:
      case ConceptKind::AtMost:
      case ConceptKind::AtLeast: return restriction(op, eval_op(op.a, s), s);
      case ConceptKind::Mu:
      case ConceptKind::Nu: {
        auto slot = static_cast<std::size_t>(op.slot);
        Interval saved = env_[slot];
        Interval cur = op.kind == ConceptKind::Mu ? Interval{ElementSet(n), ElementSet(n)}
                                                  : Interval{ElementSet::full(n), ElementSet::full(n)};
        for (;;) {
          env_[slot] = cur;
          Interval next = eval_op(op.a, s);
          if (next == cur) break;
          cur = std::move(next);
        }
        env_[slot] = std::move(saved);
        return cur;
      }
    }
    return {ElementSet(n), ElementSet(n)};
  }

  Interval restriction(const Op& op, const Interval& f, const State& s) const {
    const std::size_t n = s.n;
    Interval out{ElementSet(n), ElementSet(n)};
    const ElementSet none(n);
    for (std::size_t e = 0; e < n; ++e) {
      const ElementSet& lo = op.sym < 0 ? none : s.rlo[static_cast<std::size_t>(op.sym)].successors(e);
      const ElementSet& hi = op.sym < 0 ? none : s.rhi[static_cast<std::size_t>(op.sym)].successors(e);
      bool in_lo = false;
      bool in_hi = false;
      switch (op.kind) {
        case ConceptKind::Exists:
          in_lo = lo.intersects(f.lo);
          in_hi = hi.intersects(f.hi);
          break;
        case ConceptKind::Forall:
          in_lo = hi.subset_of(f.lo);
          in_hi = lo.subset_of(f.hi);
          break;
        case ConceptKind::AtLeast:
          in_lo = lo.count_common(f.lo) >= op.n;
          in_hi = hi.count_common(f.hi) >= op.n;
          break;
        case ConceptKind::AtMost:
          in_lo = hi.count_common(f.hi) <= op.n;
          in_hi = lo.count_common(f.lo) <= op.n;
          break;
        default: break;
      }
      if (in_lo) out.lo.insert(e);
      if (in_hi) out.hi.insert(e);
    }
    return out;
  }

  const std::map<std::string, int>& concepts_;
  const std::map<std::string, int>& roles_;
  std::vector<Op> ops_;
  int slots_ = 0;
  std::vector<Interval> env_;
};

struct Bit {
  bool role;
  std::size_t sym;
  std::size_t a;
  std::size_t b;
};

}  // namespace

std::vector<Symbol> search_order(const TBox& k, const std::vector<Concept>& goals, const Signature& extra) {
  std::set<std::string> roles = k.roles();
  std::set<std::string> concepts = k.atomic_concepts();
  for (const auto& g : goals) {
    roles.merge(roles_of(g));
    concepts.merge(atomic_concepts(g));
  }
  roles.insert(extra.roles.begin(), extra.roles.end());
  concepts.insert(extra.concepts.begin(), extra.concepts.end());

  std::vector<std::string> names(concepts.begin(), concepts.end());
  names.insert(names.end(), roles.begin(), roles.end());
  std::map<std::string, std::size_t> index;
  for (std::size_t i = 0; i < names.size(); ++i) index[names[i]] = i;

  std::vector<std::size_t> parent(names.size());
  for (std::size_t i = 0; i < parent.size(); ++i) parent[i] = i;
  auto find = [&](std::size_t x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };
  auto unite_all = [&](const std::set<std::string>& syms) {
    if (syms.empty()) return;
    std::size_t r = find(index.at(*syms.begin()));
    for (const auto& s : syms) parent[find(index.at(s))] = r;
  };

  std::map<std::string, std::set<std::string>> deps;
  for (const auto& a : k.assertions) {
    auto syms = symbols_of(a.lhs);
    syms.merge(symbols_of(a.rhs));
    unite_all(syms);
    for (const auto& [side, other] : {std::pair{&a.lhs, &a.rhs}, std::pair{&a.rhs, &a.lhs}}) {
      if (side->kind() != ConceptKind::Atomic) continue;
      for (const auto& s : symbols_of(*other))
        if (s != side->name()) deps[side->name()].insert(s);
    }
  }

  // Depth of the definition chain below each concept, cut off on cycles.
  std::map<std::string, std::size_t> rank;
  for (std::size_t round = 0; round <= names.size(); ++round) {
    bool changed = false;
    for (const auto& [name, ds] : deps) {
      std::size_t r = 0;
      for (const auto& d : ds) r = std::max(r, rank[d] + 1);
      r = std::min(r, names.size());
      if (r != rank[name]) {
        rank[name] = r;
        changed = true;
      }
    }
    if (!changed) break;
  }

  std::set<std::size_t> goal_groups;
  for (const auto& g : goals)
    for (const auto& s : symbols_of(g)) goal_groups.insert(find(index.at(s)));
  std::map<std::size_t, std::string> group_key;
  for (const auto& name : names) {
    auto g = find(index.at(name));
    if (!group_key.contains(g) || name < group_key[g]) group_key[g] = name;
  }

  std::vector<Symbol> out;
  for (const auto& c : concepts) out.push_back({false, c});
  for (const auto& r : roles) out.push_back({true, r});
  auto key = [&](const Symbol& s) {
    auto g = find(index.at(s.name));
    return std::make_tuple(!goal_groups.contains(g), group_key[g], !s.is_role, s.is_role ? 0 : rank[s.name], s.name);
  };
  std::stable_sort(out.begin(), out.end(), [&](const Symbol& x, const Symbol& y) { return key(x) < key(y); });
  return out;
}

Signature signature_of(const std::vector<Symbol>& order) {
  Signature sig;
  for (const auto& s : order) (s.is_role ? sig.roles : sig.concepts).push_back(s.name);
  return sig;
}

struct ModelSearch::Impl {
  TBox assertions;
  Concept goal;
  std::vector<Symbol> order;
  std::map<std::string, int> concept_index;
  std::map<std::string, int> role_index;

  Impl(TBox k, Concept g, std::vector<Symbol> o) : assertions(std::move(k)), goal(std::move(g)), order(std::move(o)) {
    signature_of(order).validate();
    for (const auto& s : order) {
      auto& m = s.is_role ? role_index : concept_index;
      m.emplace(s.name, static_cast<int>(m.size()));
    }
  }

  Interpretation build(const State& s) const {
    Interpretation out = Interpretation::canonical(s.n);
    for (const auto& [name, idx] : concept_index) out.set_concept(name, s.clo[static_cast<std::size_t>(idx)]);
    for (const auto& [name, idx] : role_index) out.set_role(name, s.rlo[static_cast<std::size_t>(idx)]);
    return out;
  }

  // Exact re-check of a complete assignment. Returns the goal extension when
  // the interpretation is a solution, an empty set otherwise.
  ElementSet exact(const Interpretation& i) const {
    if (!satisfies_tbox(i, assertions).satisfied) return ElementSet(i.size());
    return evaluate(goal, i);
  }
};

ModelSearch::ModelSearch(TBox assertions, Concept goal, std::vector<Symbol> order)
    : impl_(std::make_unique<Impl>(std::move(assertions), std::move(goal), std::move(order))) {}

ModelSearch::~ModelSearch() = default;

void ModelSearch::run(std::size_t n, const SolutionCallback& f, SearchStats* stats) const {
  if (n == 0) throw CapExceeded("domain size must be at least 1");
  const Impl& m = *impl_;
  Program prog(m.concept_index, m.role_index);
  std::vector<std::pair<int, int>> checks;
  for (const auto& a : m.assertions.assertions) checks.emplace_back(prog.compile(a.lhs), prog.compile(a.rhs));
  int goal = prog.compile(m.goal);

  State s;
  s.n = n;
  s.clo.assign(m.concept_index.size(), ElementSet(n));
  s.chi.assign(m.concept_index.size(), ElementSet::full(n));
  s.rlo.assign(m.role_index.size(), Relation(n));
  s.rhi.assign(m.role_index.size(), Relation(n));
  for (auto& r : s.rhi)
    for (std::size_t a = 0; a < n; ++a)
      for (std::size_t b = 0; b < n; ++b) r.insert(a, b);

  std::vector<Bit> bits;
  for (const auto& sym : m.order) {
    if (sym.is_role) {
      auto k = static_cast<std::size_t>(m.role_index.at(sym.name));
      for (std::size_t a = 0; a < n; ++a)
        for (std::size_t b = 0; b < n; ++b) bits.push_back({true, k, a, b});
    } else {
      auto k = static_cast<std::size_t>(m.concept_index.at(sym.name));
      for (std::size_t a = 0; a < n; ++a) bits.push_back({false, k, a, 0});
    }
  }

  SearchStats local;
  SearchStats& st = stats != nullptr ? *stats : local;
  auto consistent = [&]() {
    for (auto [l, r] : checks)
      if (!prog.eval(l, s).lo.subset_of(prog.eval(r, s).hi)) return false;
    return !prog.eval(goal, s).hi.empty();
  };

  bool stop = false;
  auto dfs = [&](auto& self, std::size_t depth) -> void {
    ++st.nodes;
    if (!consistent()) return;
    if (depth == bits.size()) {
      ++st.leaves;
      Interpretation model = m.build(s);
      ElementSet ext = m.exact(model);
      if (ext.empty() || !(ext == prog.eval(goal, s).lo))
        throw InternalError("three-valued and exact evaluation disagree on a complete interpretation");
      if (!f(model, ext)) stop = true;
      return;
    }
    const Bit& bit = bits[depth];
    for (int value = 0; value < 2 && !stop; ++value) {
      if (bit.role) {
        if (value == 0)
          s.rhi[bit.sym].erase(bit.a, bit.b);
        else
          s.rlo[bit.sym].insert(bit.a, bit.b);
      } else {
        if (value == 0)
          s.chi[bit.sym].erase(bit.a);
        else
          s.clo[bit.sym].insert(bit.a);
      }
      self(self, depth + 1);
      if (bit.role) {
        s.rhi[bit.sym].insert(bit.a, bit.b);
        s.rlo[bit.sym].erase(bit.a, bit.b);
      } else {
        s.chi[bit.sym].insert(bit.a);
        s.clo[bit.sym].erase(bit.a);
      }
    }
  };
  dfs(dfs, 0);
}

void ModelSearch::run_unpruned(std::size_t n, const SolutionCallback& f, SearchStats* stats) const {
  const Impl& m = *impl_;
  Signature sig = signature_of(m.order);
  InterpretationStream stream(sig, n);
  while (auto i = stream.next()) {
    if (stats != nullptr) {
      ++stats->nodes;
      ++stats->leaves;
    }
    ElementSet ext = m.exact(*i);
    if (!ext.empty() && !f(*i, ext)) return;
  }
}

}  // namespace mualcq
