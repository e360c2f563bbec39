#include <doctest.h>

#include <fstream>
#include <set>
#include <sstream>

#include <json.hpp>

#include "mualcq/enumerate.hpp"
#include "mualcq/errors.hpp"
#include "mualcq/evaluate.hpp"
#include "mualcq/generate.hpp"
#include "mualcq/model_io.hpp"
#include "mualcq/parser.hpp"
#include "mualcq/reasoning.hpp"
#include "mualcq/syntax.hpp"
#include "mualcq/theorems.hpp"
#include "oracle.hpp"

using namespace mualcq;

namespace {

std::string slurp(const std::string& name) {
  std::ifstream in(std::string(MUALCQ_CORPUS_DIR) + "/" + name);
  REQUIRE(in);
  std::ostringstream s;
  s << in.rdbuf();
  return s.str();
}

bool holds(const ImplicationVerdict& v) { return std::holds_alternative<HoldsUpTo>(v); }
bool sat(const SatVerdict& v) { return std::holds_alternative<Satisfiable>(v); }

bool oracle_models(const TBox& k, const oracle::Graph& g) {
  for (const auto& inc : k.assertions) {
    auto l = oracle::eval(inc.lhs, g, {});
    auto r = oracle::eval(inc.rhs, g, {});
    for (std::size_t e = 0; e < g.n; ++e)
      if (l[e] && !r[e]) return false;
  }
  return true;
}

/// Implication by plain enumeration with the reference evaluator.
bool oracle_implies(const TBox& k, const Concept& c, const Concept& d, std::size_t max_size) {
  Signature sig;
  std::set<std::string> concepts = k.atomic_concepts(), roles = k.roles();
  for (const auto* x : {&c, &d}) {
    auto a = atomic_concepts(*x);
    auto r = roles_of(*x);
    concepts.insert(a.begin(), a.end());
    roles.insert(r.begin(), r.end());
  }
  sig.concepts.assign(concepts.begin(), concepts.end());
  sig.roles.assign(roles.begin(), roles.end());
  bool ok = true;
  for (std::size_t n = 1; n <= max_size && ok; ++n)
    for_each_interpretation(sig, n, [&](const Interpretation& i) {
      auto g = oracle::graph_of(i);
      if (!oracle_models(k, g)) return true;
      auto l = oracle::eval(c, g, {});
      auto r = oracle::eval(d, g, {});
      for (std::size_t e = 0; e < n; ++e)
        if (l[e] && !r[e]) ok = false;
      return ok;
    });
  return ok;
}

TBox random_tbox(Rng& rng, const ConceptShape& shape) {
  TBox k;
  auto count = std::uniform_int_distribution<int>(0, 2)(rng);
  for (int j = 0; j < count; ++j) k.add(random_concept(rng, shape), random_concept(rng, shape));
  return k;
}

}  // namespace

TEST_CASE("satisfiability examples") {
  auto unknown = sat_bounded(parse_concept("mu X. exists child. X"), 3);
  REQUIRE(std::holds_alternative<UnknownUpTo>(unknown));
  CHECK(std::get<UnknownUpTo>(unknown).bound == 3);

  auto loop = sat_bounded(parse_concept("nu X. exists succ. X"), 1);
  REQUIRE(sat(loop));
  const auto& w = std::get<Satisfiable>(loop);
  CHECK(w.witness.size() == 1);
  CHECK(w.witness.role_extension("succ")->contains(0, 0));

  auto top = sat_bounded(Concept::top(), 1);
  REQUIRE(sat(top));
  CHECK(std::get<Satisfiable>(top).witness.size() == 1);

  CHECK(sat(sat_bounded(parse_concept("atleast 2 r. a and atmost 0 r. not a"), 3)));
  CHECK_FALSE(sat(sat_bounded(parse_concept("atleast 3 r. top"), 2)));
  CHECK(sat(sat_bounded(parse_concept("atleast 3 r. top"), 3)));
  CHECK_THROWS_AS(sat_bounded(parse_concept("free X; X"), 1), ClosednessError);
}

TEST_CASE("satisfiability in a tbox") {
  TBox k = parse_tbox("a <= bot");
  CHECK_FALSE(sat(sat_in_tbox(k, parse_concept("a"), 2)));
  CHECK(sat(sat_in_tbox(k, parse_concept("b"), 2)));
  auto stream = sat_in_tbox(parse_tbox(slurp("mgm.tbx")), parse_concept("stream"), 2);
  REQUIRE(sat(stream));
  const auto& s = std::get<Satisfiable>(stream);
  CHECK(satisfies_tbox(s.witness, parse_tbox(slurp("mgm.tbx"))).satisfied);
  CHECK(evaluate(parse_concept("stream"), s.witness).contains(s.element));
}

TEST_CASE("closure bound counting rule") {
  CHECK(closure_bound(Concept::atomic("a")) == 2);
  CHECK(closure_bound(Concept::top()) == 2);
  CHECK(closure_bound(parse_concept("mu X. exists r. X")) == 8);
  CHECK(closure_bound(parse_concept("a and a")) == 4);
}

TEST_CASE("internalization") {
  Concept bot = internalize(TBox{}, Concept::bot(), Concept::atomic("d"));
  CHECK(free_variables(bot).empty());
  CHECK_FALSE(sat(sat_bounded(bot, 3)));

  TBox k = parse_tbox("a <= b");
  Concept c = internalize(k, Concept::atomic("a"), Concept::atomic("b"));
  REQUIRE(c.kind() == ConceptKind::And);
  CHECK(is_well_formed(c));
  CHECK_FALSE(sat(sat_bounded(c, 3)));

  Concept with_role = internalize(parse_tbox("a <= forall r. b"), Concept::atomic("a"),
                                  parse_concept("forall s. b"));
  auto roles = roles_of(with_role);
  CHECK(roles == std::set<std::string>{"r", "s"});

  Concept clash = internalize(TBox{}, Concept::atomic("X"), Concept::top());
  CHECK(free_variables(clash).empty());
  CHECK(atomic_concepts(clash) == std::set<std::string>{"X"});
  CHECK_THROWS_AS(internalize(TBox{}, Concept::var("Y"), Concept::top()), ClosednessError);
}

TEST_CASE("implication examples") {
  CHECK(holds(implies_bounded(TBox{}, parse_concept("a and b"), parse_concept("a"), 2)));

  TBox k0 = parse_tbox(slurp("human_horse.tbx"));
  for (auto strategy : {Strategy::Direct, Strategy::Internalized, Strategy::Both}) {
    auto v = implies_bounded(k0, parse_concept("human"), parse_concept("horse"), 3, strategy);
    REQUIRE(std::holds_alternative<Refuted>(v));
    const auto& r = std::get<Refuted>(v);
    CHECK(satisfies_tbox(r.counter_model, k0).satisfied);
    CHECK(evaluate(parse_concept("human"), r.counter_model).contains(r.element));
    CHECK_FALSE(evaluate(parse_concept("horse"), r.counter_model).contains(r.element));
  }

  TBox mgm = parse_tbox(slurp("mgm.tbx"));
  CHECK(holds(implies_bounded(mgm, parse_concept("human"), parse_concept("mgm"), 2, Strategy::Both)));
  CHECK(holds(implies_bounded(mgm, parse_concept("list"), parse_concept("not stream"), 2, Strategy::Both)));
  CHECK_FALSE(holds(implies_bounded(mgm, parse_concept("mgm"), parse_concept("human"), 2)));
}

TEST_CASE("strategies agree with each other and with plain enumeration") {
  Rng rng(17);
  ConceptShape shape{{"a", "b"}, {"r"}, {}, {"X", "Y"}, 3, 2};
  int refuted = 0;
  for (int k = 0; k < 200; ++k) {
    TBox kb = random_tbox(rng, shape);
    Concept c = random_concept(rng, shape);
    Concept d = random_concept(rng, shape);
    INFO(print_tbox(kb) << "|- " << print_concept(c) << " <= " << print_concept(d));
    auto direct = implies_bounded(kb, c, d, 2, Strategy::Direct);
    auto internal = implies_bounded(kb, c, d, 2, Strategy::Internalized);
    CHECK(holds(direct) == holds(internal));
    CHECK(holds(direct) == oracle_implies(kb, c, d, 2));
    SearchOptions exhaustive{SearchMode::Exhaustive, {}, nullptr};
    CHECK(holds(implies_bounded(kb, c, d, 2, Strategy::Direct, exhaustive)) == holds(direct));

    // A witness for the internalized concept forces a direct refutation.
    if (sat(sat_bounded(internalize(kb, c, d), 2))) CHECK_FALSE(holds(direct));
    refuted += holds(direct) ? 0 : 1;
  }
  CHECK(refuted > 20);
  CHECK(refuted < 180);
}

TEST_CASE("enlarging the bound never flips a conclusive verdict") {
  Rng rng(23);
  ConceptShape shape{{"a", "b"}, {"r"}, {}, {"X", "Y"}, 3, 2};
  for (int k = 0; k < 60; ++k) {
    Concept c = random_concept(rng, shape);
    bool found = false;
    for (std::size_t n = 1; n <= 3; ++n) {
      bool now = sat(sat_bounded(c, n));
      CHECK((!found || now));
      found = now;
    }
    TBox kb = random_tbox(rng, shape);
    Concept d = random_concept(rng, shape);
    bool refuted = false;
    for (std::size_t n = 1; n <= 3; ++n) {
      bool now = !holds(implies_bounded(kb, c, d, n));
      CHECK((!refuted || now));
      refuted = now;
    }
  }
}

TEST_CASE("pruned search visits exactly the models found by enumeration") {
  Rng rng(29);
  ConceptShape shape{{"a", "b"}, {"r"}, {}, {"X"}, 3, 2};
  for (int k = 0; k < 40; ++k) {
    TBox kb = random_tbox(rng, shape);
    Concept goal = random_concept(rng, shape);
    auto order = search_order(kb, {goal}, {{"a", "b"}, {"r"}});
    ModelSearch search(kb, goal, order);
    std::set<std::string> pruned, plain;
    SearchStats stats;
    search.run(2, [&](const Interpretation& i, const ElementSet& ext) {
      CHECK(ext == evaluate(goal, i));
      CHECK_FALSE(ext.empty());
      pruned.insert(print_model(i));
      return true;
    }, &stats);
    search.run_unpruned(2, [&](const Interpretation& i, const ElementSet&) {
      plain.insert(print_model(i));
      return true;
    });
    CHECK(pruned == plain);
    CHECK(stats.leaves >= pruned.size());

    std::size_t brute = 0;
    for_each_interpretation(signature_of(order), 2, [&](const Interpretation& i) {
      auto g = oracle::graph_of(i);
      auto ext = oracle::eval(goal, g, {});
      bool some = false;
      for (bool b : ext) some = some || b;
      if (oracle_models(kb, g) && some) ++brute;
      return true;
    });
    CHECK(brute == plain.size());
  }
}

TEST_CASE("models of a tbox") {
  TBox k = parse_tbox(slurp("human_horse.tbx"));
  std::size_t count = 0;
  for_each_model(k, 1, [&](const Interpretation& i) {
    ++count;
    CHECK(satisfies_tbox(i, k).satisfied);
    return true;
  });
  std::size_t brute = 0;
  for_each_interpretation({{"horse", "human", "mammal"}, {"parent"}}, 1, [&](const Interpretation& i) {
    brute += satisfies_tbox(i, k).satisfied ? 1 : 0;
    return true;
  });
  CHECK(count == brute);
  CHECK(count > 0);
}

TEST_CASE("verdict rendering") {
  auto loop = sat_bounded(parse_concept("nu X. exists succ. X"), 1);
  CHECK(to_text(loop) == "satisfiable at element d1\ndomain: [d1]\nrole succ: [(d1,d1)]\n");
  CHECK(to_text(SatVerdict{UnknownUpTo{3}}) == "unknown up to size 3\n");
  CHECK(to_text(ImplicationVerdict{HoldsUpTo{2}}) == "holds up to size 2\n");
  auto j = nlohmann::json::parse(to_json(loop));
  CHECK(j["verdict"] == "satisfiable");
  CHECK(j["element"] == "d1");
  CHECK(j["model"]["roles"]["succ"][0][0] == "d1");
  auto h = nlohmann::json::parse(to_json(ImplicationVerdict{HoldsUpTo{2}}));
  CHECK(h["bound"] == 2);
  CHECK(std::string(to_string(Strategy::Both)) == "both");
}

TEST_CASE("monotonicity theorems on named instances") {
  // Fixpoint monotonicity with the dag template.
  TBox k = parse_tbox("student <= person");
  Concept dag_s = parse_concept("mu X. emptydag or (student and exists arc. top and forall arc. X)");
  Concept dag_p = parse_concept("mu X. emptydag or (person and exists arc. top and forall arc. X)");
  CHECK(holds(implies_bounded(k, dag_s, dag_p, 3)));
  CHECK(oracle_implies(k, dag_s, dag_p, 2));

  // Negative context: bot <= c gives not c <= not bot.
  CHECK(holds(implies_bounded(TBox{}, parse_concept("not c"), parse_concept("not bot"), 2)));

  TheoremSuiteConfig cfg;
  cfg.samples = 60;
  cfg.seed = 99;
  SuiteReport r = theorem_suite(cfg);
  CHECK(r.cases == 60);
  CHECK(r.ok());
  CHECK(r.non_vacuous > 10);
}
