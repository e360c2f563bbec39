#include "mualcq/theorems.hpp"

#include "mualcq/enumerate.hpp"
#include "mualcq/evaluate.hpp"
#include "mualcq/generate.hpp"
#include "mualcq/parser.hpp"
#include "mualcq/syntax.hpp"

namespace mualcq {

namespace {

const std::string kX = "X";

struct World {
  Interpretation model;
  std::vector<Valuation> valuations;
};

std::vector<World> models_of(const TBox& k, const std::vector<Interpretation>& all) {
  std::vector<World> out;
  for (const auto& i : all) {
    if (!satisfies_tbox(i, k).satisfied) continue;
    World w{i, {}};
    for (std::uint64_t bits = 0; bits < (std::uint64_t{1} << i.size()); ++bits) {
      ElementSet e(i.size());
      for (std::size_t s = 0; s < i.size(); ++s)
        if ((bits >> s) & 1U) e.insert(s);
      w.valuations.push_back({{kX, e}});
    }
    out.push_back(std::move(w));
  }
  return out;
}

bool entailed(const std::vector<World>& worlds, const Concept& c, const Concept& d, bool open) {
  for (const auto& w : worlds) {
    if (!open) {
      if (!evaluate(c, w.model).subset_of(evaluate(d, w.model))) return false;
      continue;
    }
    for (const auto& rho : w.valuations)
      if (!evaluate(c, w.model, rho).subset_of(evaluate(d, w.model, rho))) return false;
  }
  return true;
}

TBox random_tbox(Rng& rng, const ConceptShape& shape) {
  TBox k;
  auto count = std::uniform_int_distribution<int>(0, 2)(rng);
  for (int j = 0; j < count; ++j) k.add(random_concept(rng, shape), random_concept(rng, shape));
  return k;
}

std::string describe(const TBox& k, const std::string& claim) {
  std::string text = claim + " under K = {";
  for (std::size_t j = 0; j < k.size(); ++j)
    text += (j ? "; " : "") + print_concept(k.assertions[j].lhs) + " <= " + print_concept(k.assertions[j].rhs);
  return text + "}";
}

}  // namespace

SuiteReport theorem_suite(const TheoremSuiteConfig& cfg) {
  SuiteReport report{"monotonicity theorems"};
  Rng rng(cfg.seed);
  Signature sig{{"a", "b"}, {"r"}};
  std::vector<Interpretation> all;
  for (std::size_t n = 1; n <= cfg.max_size; ++n)
    for_each_interpretation(sig, n, [&](const Interpretation& i) {
      all.push_back(i);
      return true;
    });

  ConceptShape closed{{"a", "b"}, {"r"}, {}, {"Y", "Z"}, 2, 2};
  ConceptShape open = closed;
  open.max_depth = 3;

  for (std::size_t sample = 0; sample < cfg.samples; ++sample) {
    ++report.cases;
    TBox k = random_tbox(rng, closed);
    auto worlds = models_of(k, all);
    auto style = std::uniform_int_distribution<int>(0, 3)(rng);

    if (sample % 2 == 0) {
      Concept c = style == 3 ? random_concept(rng, open) : random_context(rng, open, kX, true);
      Concept e = style == 3 ? random_concept(rng, open) : random_context(rng, open, kX, true);
      Concept d = style == 0 ? Concept::disj(c, e) : e;
      if (style == 1) c = Concept::conj(e, c);
      if (!entailed(worlds, c, d, true)) continue;
      ++report.non_vacuous;
      for (auto kind : {FixpointKind::Least, FixpointKind::Greatest}) {
        Concept lhs = Concept::fixpoint(kind, kX, c);
        Concept rhs = Concept::fixpoint(kind, kX, d);
        if (!entailed(worlds, lhs, rhs, false))
          report.fail(describe(k, print_concept(lhs) + " <= " + print_concept(rhs)));
      }
    } else {
      Concept c1 = random_concept(rng, closed);
      Concept e = random_concept(rng, closed);
      Concept c2 = style == 0 ? Concept::disj(c1, e) : e;
      if (style == 1) c1 = Concept::conj(e, c1);
      if (!entailed(worlds, c1, c2, false)) continue;
      ++report.non_vacuous;
      auto polarity = std::uniform_int_distribution<int>(0, 4)(rng);
      Concept ctx = polarity == 4 ? random_concept(rng, open) : random_context(rng, open, kX, polarity < 2);
      Concept d1 = substitute(ctx, kX, c1);
      Concept d2 = substitute(ctx, kX, c2);
      auto p = polarity_of(ctx, kX);
      bool ok = true;
      if (p == Polarity::Positive || p == Polarity::Absent) ok = ok && entailed(worlds, d1, d2, false);
      if (p == Polarity::Negative || p == Polarity::Absent) ok = ok && entailed(worlds, d2, d1, false);
      if (!ok)
        report.fail(describe(k, "context " + print_concept(ctx) + " with " + print_concept(c1) + " <= " +
                                    print_concept(c2)));
    }
  }
  return report;
}

}  // namespace mualcq
