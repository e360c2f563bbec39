#include "mualcq/reasoning.hpp"

#include <limits>
#include <optional>
#include <set>
#include <sstream>

#include <json.hpp>

#include "mualcq/errors.hpp"
#include "mualcq/evaluate.hpp"
#include "mualcq/model_io.hpp"
#include "mualcq/syntax.hpp"

namespace mualcq {

namespace {

void require_closed(const Concept& c, const char* what) {
  auto fv = free_variables(c);
  if (!fv.empty()) throw ClosednessError(std::string(what) + " has free variable " + *fv.begin());
}

std::optional<std::pair<Interpretation, ElementSet>> first_solution(const ModelSearch& search, std::size_t max_size,
                                                                    const SearchOptions& opts) {
  std::optional<std::pair<Interpretation, ElementSet>> found;
  auto take = [&](const Interpretation& i, const ElementSet& ext) {
    found.emplace(i, ext);
    return false;
  };
  for (std::size_t n = 1; n <= max_size && !found; ++n) {
    if (opts.mode == SearchMode::Pruned)
      search.run(n, take, opts.stats);
    else
      search.run_unpruned(n, take, opts.stats);
  }
  return found;
}

SatVerdict search_sat(const TBox& k, const Concept& c, std::size_t max_size, const SearchOptions& opts) {
  require_closed(c, "concept");
  check_closed(k);
  ModelSearch search(k, c, search_order(k, {c}, opts.signature));
  auto found = first_solution(search, max_size, opts);
  if (!found) return UnknownUpTo{max_size};
  auto& [model, ext] = *found;
  std::size_t element = ext.first();
  if (!evaluate(c, model).contains(element) || !satisfies_tbox(model, k).satisfied)
    throw InternalError("satisfiability witness failed re-validation");
  return Satisfiable{std::move(model), element};
}

void validate_refutation(const TBox& k, const Concept& c, const Concept& d, const Refuted& r) {
  bool ok = satisfies_tbox(r.counter_model, k).satisfied && evaluate(c, r.counter_model).contains(r.element) &&
            !evaluate(d, r.counter_model).contains(r.element);
  if (!ok) throw InternalError("counter-model failed re-validation");
}

ImplicationVerdict implies_direct(const TBox& k, const Concept& c, const Concept& d, std::size_t max_size,
                                  const SearchOptions& opts) {
  ModelSearch search(k, Concept::conj(c, Concept::negation(d)), search_order(k, {c, d}, opts.signature));
  auto found = first_solution(search, max_size, opts);
  if (!found) return HoldsUpTo{max_size};
  Refuted r{std::move(found->first), found->second.first()};
  validate_refutation(k, c, d, r);
  return r;
}

ImplicationVerdict implies_internalized(const TBox& k, const Concept& c, const Concept& d, std::size_t max_size,
                                        const SearchOptions& opts) {
  ModelSearch search(TBox{}, internalize(k, c, d), search_order(k, {c, d}, opts.signature));
  auto found = first_solution(search, max_size, opts);
  if (!found) return HoldsUpTo{max_size};
  // The part generated by the witness element is a model of k.
  std::size_t s = found->second.first();
  GeneratedSub sub = generated_sub(found->first, {}, s);
  std::size_t element = 0;
  while (sub.original_index[element] != s) ++element;
  Refuted r{std::move(sub.interpretation), element};
  validate_refutation(k, c, d, r);
  return r;
}

void subterm_keys(const Concept& c, std::set<std::string>& out, std::string& key) {
  key.clear();
  std::ostringstream s;
  std::vector<std::string> kids;
  auto sub = [&](const Concept& x) {
    std::string k;
    subterm_keys(x, out, k);
    kids.push_back(std::move(k));
  };
  switch (c.kind()) {
    case ConceptKind::Atomic: s << "A:" << c.name(); break;
    case ConceptKind::Var: s << "V:" << c.name(); break;
    case ConceptKind::Top: s << "T"; break;
    case ConceptKind::Bot: s << "B"; break;
    case ConceptKind::Not: sub(c.child()); s << "N(" << kids[0] << ")"; break;
    case ConceptKind::And:
    case ConceptKind::Or:
      sub(c.lhs());
      sub(c.rhs());
      s << (c.kind() == ConceptKind::And ? "&(" : "|(") << kids[0] << "," << kids[1] << ")";
      break;
    case ConceptKind::Exists:
    case ConceptKind::Forall:
    case ConceptKind::AtMost:
    case ConceptKind::AtLeast:
      sub(c.child());
      s << static_cast<int>(c.kind()) << ":" << c.number() << ":" << c.role() << "(" << kids[0] << ")";
      break;
    case ConceptKind::Mu:
    case ConceptKind::Nu:
      sub(c.body());
      s << (c.kind() == ConceptKind::Mu ? "mu " : "nu ") << c.name() << "(" << kids[0] << ")";
      break;
  }
  key = s.str();
  out.insert(key);
}

nlohmann::ordered_json model_object(const Interpretation& i) {
  nlohmann::ordered_json j;
  j["domain"] = i.domain();
  j["concepts"] = nlohmann::ordered_json::object();
  for (const auto& [name, ext] : i.concepts()) j["concepts"][name] = element_names(i, ext);
  j["roles"] = nlohmann::ordered_json::object();
  for (const auto& [name, rel] : i.roles()) {
    auto pairs = nlohmann::ordered_json::array();
    for (auto [a, b] : rel.pairs()) pairs.push_back({i.name_of(a), i.name_of(b)});
    j["roles"][name] = pairs;
  }
  return j;
}

}  // namespace

Concept internalize(const TBox& k, const Concept& c, const Concept& d) {
  require_closed(c, "left-hand concept");
  require_closed(d, "right-hand concept");
  check_closed(k);
  std::set<std::string> roles = k.roles();
  roles.merge(roles_of(c));
  roles.merge(roles_of(d));
  std::set<std::string> taken = all_names(c);
  taken.merge(all_names(d));
  for (const auto& a : k.assertions) {
    taken.merge(all_names(a.lhs));
    taken.merge(all_names(a.rhs));
  }
  std::string x = fresh_name("X", taken);

  std::optional<Concept> ck;
  for (const auto& a : k.assertions) {
    Concept clause = Concept::disj(Concept::negation(a.lhs), a.rhs);
    ck = ck ? Concept::conj(*ck, clause) : clause;
  }
  std::optional<Concept> body;
  for (const auto& r : roles) {
    Concept guard = Concept::forall(r, Concept::var(x));
    body = body ? Concept::conj(*body, guard) : guard;
  }
  Concept kb = ck.value_or(Concept::top());
  Concept inner = body ? Concept::conj(*body, kb) : kb;
  return Concept::conj(Concept::conj(Concept::nu(x, inner), c), Concept::negation(d));
}

SatVerdict sat_bounded(const Concept& c, std::size_t max_size, const SearchOptions& opts) {
  return search_sat(TBox{}, c, max_size, opts);
}

SatVerdict sat_in_tbox(const TBox& k, const Concept& c, std::size_t max_size, const SearchOptions& opts) {
  return search_sat(k, c, max_size, opts);
}

ImplicationVerdict implies_bounded(const TBox& k, const Concept& c, const Concept& d, std::size_t max_size,
                                   Strategy strategy, const SearchOptions& opts) {
  require_closed(c, "left-hand concept");
  require_closed(d, "right-hand concept");
  check_closed(k);
  switch (strategy) {
    case Strategy::Direct: return implies_direct(k, c, d, max_size, opts);
    case Strategy::Internalized: return implies_internalized(k, c, d, max_size, opts);
    case Strategy::Both: {
      auto direct = implies_direct(k, c, d, max_size, opts);
      auto internal = implies_internalized(k, c, d, max_size, opts);
      if (direct.index() != internal.index())
        throw InternalError("direct and internalized strategies disagree up to size " + std::to_string(max_size));
      return direct;
    }
  }
  return HoldsUpTo{max_size};
}

void for_each_model(const TBox& k, std::size_t n, const std::function<bool(const Interpretation&)>& f,
                    const SearchOptions& opts) {
  check_closed(k);
  ModelSearch search(k, Concept::top(), search_order(k, {}, opts.signature));
  auto cb = [&](const Interpretation& i, const ElementSet&) { return f(i); };
  if (opts.mode == SearchMode::Pruned)
    search.run(n, cb, opts.stats);
  else
    search.run_unpruned(n, cb, opts.stats);
}

std::uint64_t closure_bound(const Concept& c) {
  std::set<std::string> keys;
  std::string root;
  subterm_keys(c, keys, root);
  if (keys.size() >= 64) return std::numeric_limits<std::uint64_t>::max();
  return std::uint64_t{1} << keys.size();
}

std::string to_text(const SatVerdict& v) {
  if (const auto* s = std::get_if<Satisfiable>(&v))
    return "satisfiable at element " + s->witness.name_of(s->element) + "\n" + print_model(s->witness);
  return "unknown up to size " + std::to_string(std::get<UnknownUpTo>(v).bound) + "\n";
}

std::string to_text(const ImplicationVerdict& v) {
  if (const auto* r = std::get_if<Refuted>(&v))
    return "refuted at element " + r->counter_model.name_of(r->element) + "\n" + print_model(r->counter_model);
  return "holds up to size " + std::to_string(std::get<HoldsUpTo>(v).bound) + "\n";
}

std::string to_json(const SatVerdict& v) {
  nlohmann::ordered_json j;
  if (const auto* s = std::get_if<Satisfiable>(&v)) {
    j["verdict"] = "satisfiable";
    j["bound"] = s->witness.size();
    j["element"] = s->witness.name_of(s->element);
    j["model"] = model_object(s->witness);
  } else {
    j["verdict"] = "unknown";
    j["bound"] = std::get<UnknownUpTo>(v).bound;
  }
  return j.dump();
}

std::string to_json(const ImplicationVerdict& v) {
  nlohmann::ordered_json j;
  if (const auto* r = std::get_if<Refuted>(&v)) {
    j["verdict"] = "refuted";
    j["bound"] = r->counter_model.size();
    j["element"] = r->counter_model.name_of(r->element);
    j["model"] = model_object(r->counter_model);
  } else {
    j["verdict"] = "holds";
    j["bound"] = std::get<HoldsUpTo>(v).bound;
  }
  return j.dump();
}

std::string model_json(const Interpretation& i) { return model_object(i).dump(); }

const char* to_string(Strategy s) noexcept {
  switch (s) {
    case Strategy::Direct: return "direct";
    case Strategy::Internalized: return "internalized";
    case Strategy::Both: return "both";
  }
  return "?";
}

}  // namespace mualcq
