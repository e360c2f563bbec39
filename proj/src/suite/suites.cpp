#include "mualcq/suite.hpp"

#include "mualcq/errors.hpp"
#include "mualcq/evaluate.hpp"
#include "mualcq/generate.hpp"
#include "mualcq/mucalc.hpp"
#include "mualcq/parser.hpp"
#include "mualcq/syntax.hpp"
#include "mualcq/theorems.hpp"
#include "mualcq/translate.hpp"

namespace mualcq {

namespace {

std::size_t samples_or(const SuiteConfig& cfg, std::size_t fallback) {
  return cfg.samples != 0 ? cfg.samples : fallback;
}

std::size_t random_size(Rng& rng, std::size_t lo, std::size_t hi) {
  return std::uniform_int_distribution<std::size_t>(lo, hi)(rng);
}

FixpointKind random_kind(Rng& rng) {
  return std::bernoulli_distribution(0.5)(rng) ? FixpointKind::Least : FixpointKind::Greatest;
}

const Signature kSig{{"a", "b"}, {"r", "s"}};

// Variables that may occur free in generated concepts get values from every
// random valuation.
const std::vector<std::string> kValued{"V", "X", "Y", "Z", "W"};

std::string show(const Concept& c) { return print_concept(c); }

}  // namespace

SuiteReport law_suite(const SuiteConfig& cfg) {
  SuiteReport report{"algebraic laws"};
  Rng rng(cfg.seed);
  ConceptShape body_shape{kSig.concepts, kSig.roles, {"V"}, {"Y", "Z"}, 3, 3};
  ConceptShape full_shape{kSig.concepts, kSig.roles, {"V"}, {"X", "Y", "Z"}, 4, 3};
  ConceptShape closed_shape{kSig.concepts, kSig.roles, {}, {"X", "Y", "Z"}, 4, 3};
  ConceptShape subst_target{kSig.concepts, kSig.roles, {"X", "V"}, {"X", "Y", "Z"}, 4, 3};
  ConceptShape subst_value{kSig.concepts, kSig.roles, {"Y", "V"}, {"Z"}, 2, 3};

  for (std::size_t sample = 0; sample < samples_or(cfg, 1000); ++sample) {
    ++report.cases;
    Interpretation i = random_interpretation(rng, random_size(rng, 1, 4), kSig);
    Valuation rho = random_valuation(rng, i, kValued);
    auto ev = [&](const Concept& c, const Valuation& v) { return evaluate(c, i, v); };

    Concept body = std::bernoulli_distribution(0.8)(rng) ? random_context(rng, body_shape, "X", true)
                                                          : random_concept(rng, body_shape);
    FixpointKind kind = random_kind(rng);
    Concept fix = Concept::fixpoint(kind, "X", body);
    ElementSet fix_ext = ev(fix, rho);

    if (!(fix_ext == ev(substitute(body, "X", fix), rho))) report.fail("unfolding: " + show(fix));
    if (!(fix_ext == ev(dual_fixpoint(fix), rho))) report.fail("duality: " + show(fix));
    if (!ev(Concept::mu("X", body), rho).subset_of(ev(Concept::nu("X", body), rho)))
      report.fail("mu below nu: " + show(body));

    std::string w = fresh_name("W", all_names(body));
    Concept renamed = Concept::fixpoint(kind, w, substitute(body, "X", Concept::var(w)));
    if (!alpha_equivalent(fix, renamed) || !(fix_ext == ev(renamed, rho)))
      report.fail("renaming: " + show(fix) + " vs " + show(renamed));

    Concept plain = random_concept(rng, body_shape);
    if (!free_variables(plain).contains("X") &&
        !(ev(Concept::fixpoint(random_kind(rng), "X", plain), rho) == ev(plain, rho)))
      report.fail("vacuous binder: " + show(plain));

    Concept c = random_concept(rng, full_shape);
    Concept a = Concept::atomic("a");
    auto n = static_cast<std::uint32_t>(random_size(rng, 0, 3));
    const std::string& role = kSig.roles[random_size(rng, 0, 1)];
    bool derived = ev(Concept::top(), rho) == ev(Concept::disj(a, Concept::negation(a)), rho) &&
                   ev(Concept::bot(), rho) == ev(Concept::negation(Concept::top()), rho) &&
                   ev(Concept::forall(role, c), rho) ==
                       ev(Concept::negation(Concept::exists(role, Concept::negation(c))), rho) &&
                   ev(Concept::at_most(n, role, c), rho) ==
                       ev(Concept::negation(Concept::at_least(n + 1, role, c)), rho);
    if (!derived) report.fail("derived constructors with filler " + show(c));

    Concept closed = random_concept(rng, closed_shape);
    if (!(ev(closed, rho) == ev(closed, random_valuation(rng, i, kValued))))
      report.fail("valuation independence: " + show(closed));

    Concept target = random_concept(rng, subst_target);
    Concept value = random_concept(rng, subst_value);
    Valuation updated = rho;
    updated.insert_or_assign("X", ev(value, rho));
    if (!(ev(substitute(target, "X", value), rho) == ev(target, updated)))
      report.fail("substitution: " + show(value) + " for X in " + show(target));
  }
  return report;
}

SuiteReport tarski_suite(const SuiteConfig& cfg) {
  SuiteReport report{"fixpoint iteration against brute force"};
  Rng rng(cfg.seed);
  ConceptShape shape{kSig.concepts, kSig.roles, {"V"}, {"Y", "Z"}, 4, 3};
  for (std::size_t sample = 0; sample < samples_or(cfg, 500); ++sample) {
    ++report.cases;
    std::size_t n = random_size(rng, 1, std::min<std::size_t>(4, cfg.brute_force_cap));
    Interpretation i = random_interpretation(rng, n, kSig);
    Valuation rho = random_valuation(rng, i, {"V"});
    Concept body = std::bernoulli_distribution(0.8)(rng) ? random_context(rng, shape, "X", true)
                                                          : random_concept(rng, shape);
    FixpointKind kind = random_kind(rng);
    Approximants iter = fixpoint_approximants(kind, "X", body, i, rho);
    ElementSet oracle = tarski_oracle(kind, "X", body, i, rho, cfg.brute_force_cap);
    std::string what = (kind == FixpointKind::Least ? "mu X. " : "nu X. ") + show(body);
    if (!(iter.result == oracle)) report.fail("disagreement: " + what);
    if (iter.trace.size() > n + 1 || !(iter.trace.back() == iter.result)) report.fail("trace length: " + what);
    for (std::size_t k = 1; k < iter.trace.size(); ++k) {
      const auto& prev = iter.trace[k - 1];
      const auto& next = iter.trace[k];
      bool step = kind == FixpointKind::Least ? prev.subset_of(next) : next.subset_of(prev);
      if (!step || prev == next) report.fail("trace not a strict chain: " + what);
    }
  }
  return report;
}

SuiteReport generated_sub_suite(const SuiteConfig& cfg) {
  SuiteReport report{"generated sub-interpretations"};
  Rng rng(cfg.seed);
  ConceptShape shape{kSig.concepts, kSig.roles, {"V", "W"}, {"X", "Y", "Z"}, 4, 3};
  for (std::size_t sample = 0; sample < samples_or(cfg, 300); ++sample) {
    ++report.cases;
    double density = std::uniform_real_distribution<double>(0.1, 0.5)(rng);
    Interpretation i = random_interpretation(rng, random_size(rng, 1, 4), kSig, density);
    Valuation rho = random_valuation(rng, i, kValued);
    Concept c = random_concept(rng, shape);
    std::size_t s = random_size(rng, 0, i.size() - 1);
    GeneratedSub sub = generated_sub(i, rho, s);
    ElementSet whole = evaluate(c, i, rho);
    ElementSet part = evaluate(c, sub.interpretation, sub.valuation);
    for (std::size_t k = 0; k < sub.interpretation.size(); ++k)
      if (whole.contains(sub.original_index[k]) != part.contains(k))
        report.fail("membership of " + i.name_of(sub.original_index[k]) + " in " + show(c));
  }
  return report;
}

SuiteReport q_suite(const SuiteConfig& cfg) {
  SuiteReport report{"translation q"};
  Rng rng(cfg.seed);
  ConceptShape shape{kSig.concepts, kSig.roles, {"V"}, {"X", "Y", "Z"}, 4, 3};
  shape.number_restrictions = false;
  for (std::size_t sample = 0; sample < samples_or(cfg, 500); ++sample) {
    ++report.cases;
    Interpretation i = random_interpretation(rng, random_size(rng, 1, 4), kSig);
    Valuation rho = random_valuation(rng, i, {"V"});
    Concept c = random_concept(rng, shape);
    MuFormula f = translate_q(c);
    if (f.size() != c.size()) report.fail("size changed: " + show(c));
    if (!is_well_formed(f)) report.fail("ill-formed output: " + print_formula(f));
    if (!(evaluate(c, i, rho) == eval_mu(f, kripke_of_interpretation(i), rho)))
      report.fail("extensions differ: " + show(c));
  }
  return report;
}

SuiteReport u_tree_suite(const SuiteConfig& cfg) {
  SuiteReport report{"translation u on trees"};
  Rng rng(cfg.seed);
  ConceptShape shape{kSig.concepts, kSig.roles, {}, {"X", "Y", "Z"}, 3, 3};
  for (std::size_t sample = 0; sample < samples_or(cfg, 300); ++sample) {
    ++report.cases;
    Interpretation tree = random_tree(rng, 3, 3, kSig);
    Concept c = random_concept(rng, shape);
    TranslationResult u = translate_u(c);
    ChainedTree chained = chain_tree_model(tree, 0, u.fresh_roles);
    const std::string what = show(c) + " on a " + std::to_string(tree.size()) + "-node tree";

    if (auto v = check_deterministic(chained.structure)) report.fail("chained structure not deterministic: " + what);
    for (const auto& label : labels_of(u.formula)) {
      bool known = false;
      for (const auto& [r, next] : u.fresh_roles) known = known || label == r || label == next;
      if (!known) report.fail("unexpected label " + label + " in u of " + show(c));
    }
    if (!is_well_formed(u.formula)) report.fail("ill-formed output: " + print_formula(u.formula));

    ElementSet source = evaluate(c, tree);
    ElementSet target = eval_mu(u.formula, chained.structure);
    for (std::size_t k = 0; k < chained.structure.size(); ++k)
      if (source.contains(chained.original_index[k]) != target.contains(k))
        report.fail("u disagrees at " + chained.structure.name_of(k) + ": " + what);

    Interpretation back = collapse_chains(chained.structure, u.fresh_roles);
    for (const auto& r : roles_of(c)) {
      const Relation* orig = tree.role_extension(r);
      const Relation* rebuilt = back.role_extension(r);
      for (std::size_t k = 0; k < back.size(); ++k)
        for (std::size_t l = 0; l < back.size(); ++l)
          if (orig->contains(chained.original_index[k], chained.original_index[l]) != rebuilt->contains(k, l))
            report.fail("collapse changed role " + r + ": " + what);
    }
    ElementSet again = evaluate(c, back);
    for (std::size_t k = 0; k < back.size(); ++k)
      if (source.contains(chained.original_index[k]) != again.contains(k))
        report.fail("collapse changed membership at " + back.name_of(k) + ": " + what);
  }
  return report;
}

std::vector<SuiteReport> run_all_suites(const SuiteConfig& cfg) {
  std::vector<SuiteReport> out;
  out.push_back(law_suite(cfg));
  out.push_back(tarski_suite(cfg));
  out.push_back(generated_sub_suite(cfg));
  out.push_back(q_suite(cfg));
  out.push_back(u_tree_suite(cfg));
  out.push_back(theorem_suite({cfg.samples != 0 ? cfg.samples : 200, cfg.seed, 2}));
  return out;
}

}  // namespace mualcq
