#include <doctest.h>

#include "mualcq/errors.hpp"
#include "mualcq/evaluate.hpp"
#include "mualcq/generate.hpp"
#include "mualcq/model_io.hpp"
#include "mualcq/mucalc.hpp"
#include "mualcq/parser.hpp"
#include "mualcq/translate.hpp"
#include "oracle.hpp"

using namespace mualcq;

namespace {

using F = MuFormula;

KripkeStructure chain(std::size_t n, const std::string& label) {
  std::vector<std::string> names;
  for (std::size_t k = 0; k < n; ++k) names.push_back("s" + std::to_string(k + 1));
  KripkeStructure m(names);
  m.declare_label(label);
  for (std::size_t k = 0; k + 1 < n; ++k) m.add_edge(label, k, k + 1);
  return m;
}

KripkeStructure random_structure(Rng& rng, std::size_t n) {
  Interpretation i = random_interpretation(rng, n, {{"p", "q"}, {"a", "b"}}, 0.3);
  return kripke_of_interpretation(i);
}

}  // namespace

TEST_CASE("formula evaluation examples") {
  KripkeStructure m({"s", "t"});
  m.add_edge("a", 0, 1);
  CHECK(eval_mu(F::diamond("a", F::top()), m) == ElementSet::of(2, {0}));
  CHECK(eval_mu(F::box("a", F::bot()), m) == ElementSet::of(2, {1}));

  KripkeStructure c = chain(3, "a");
  c.set_atom("p", ElementSet::full(3));
  CHECK(eval_mu(F::nu("X", F::conj(F::atom("p"), F::box("a", F::var("X")))), c) == ElementSet::full(3));
  c.set_atom("p", ElementSet::of(3, {2}));
  CHECK(eval_mu(F::mu("X", F::disj(F::atom("p"), F::diamond("a", F::var("X")))), c) == ElementSet::full(3));
  CHECK(eval_mu(F::atom("missing"), c).empty());
  CHECK_THROWS_AS(eval_mu(F::var("Z"), c), UnboundVariable);
}

TEST_CASE("formula evaluator agrees with the reference semantics") {
  Rng rng(31);
  ConceptShape shape{{"p", "q"}, {"a", "b"}, {}, {"X", "Y"}, 4, 2};
  shape.number_restrictions = false;
  for (int k = 0; k < 300; ++k) {
    KripkeStructure m = random_structure(rng, 1 + k % 3);
    MuFormula f = translate_q(random_concept(rng, shape));
    INFO(print_formula(f));
    CHECK(oracle::to_set(eval_mu(f, m)) == oracle::eval(f, oracle::graph_of(m), {}));
  }
}

TEST_CASE("formula syntax utilities") {
  MuFormula f = F::mu("X", F::disj(F::atom("p"), F::diamond("a", F::var("X"))));
  CHECK(print_formula(f) == "mu X. p | <a>X");
  CHECK(print_formula(F::negation(F::conj(F::atom("p"), F::box("b", F::bot())))) == "~(p & [b]false)");
  CHECK(free_variables(f).empty());
  CHECK(labels_of(f) == std::set<std::string>{"a"});
  CHECK(atoms_of(f) == std::set<std::string>{"p"});
  CHECK(f.size() == 5);
  CHECK(polarity_of(F::negation(F::var("X")), "X") == Polarity::Negative);
  CHECK_FALSE(is_well_formed(F::nu("X", F::negation(F::var("X")))));
  CHECK_THROWS_AS(check_well_formed(F::nu("X", F::negation(F::var("X")))), WellFormednessError);
  CHECK(alpha_equivalent(f, F::mu("Y", F::disj(F::atom("p"), F::diamond("a", F::var("Y"))))));
  CHECK_FALSE(alpha_equivalent(f, F::nu("X", F::disj(F::atom("p"), F::diamond("a", F::var("X"))))));
}

TEST_CASE("kripke files") {
  KripkeStructure m = parse_kripke("domain: [s, t]\nconcept p: [t]\nlabel a: [(s,t)]\n");
  CHECK(m.relation("a")->contains(0, 1));
  CHECK(m.atom("p")->contains(1));
  CHECK(m.atom("q") == nullptr);
  CHECK(parse_kripke(print_kripke(m)) == m);
  CHECK_THROWS_AS(parse_kripke("domain: [s]\nrole a: [(s,s)]\n"), ModelFormatError);
}

TEST_CASE("determinism check") {
  KripkeStructure m({"s", "t", "v"});
  CHECK_FALSE(check_deterministic(m).has_value());
  m.add_edge("a", 0, 1);
  m.add_edge("b", 0, 2);
  CHECK_FALSE(check_deterministic(m).has_value());
  m.add_edge("a", 0, 2);
  auto v = check_deterministic(m);
  REQUIRE(v.has_value());
  CHECK(v->label == "a");
  CHECK(v->state == 0);
  CHECK(v->successors == ElementSet::of(3, {1, 2}));
}

TEST_CASE("star modalities match graph reachability") {
  Rng rng(37);
  for (int k = 0; k < 300; ++k) {
    auto n = static_cast<std::size_t>(1 + k % 5);
    KripkeStructure m = random_structure(rng, n);
    auto g = oracle::graph_of(m);
    auto reach = oracle::reachability(g, "a");
    ElementSet all = eval_mu(box_star("a", F::atom("p"), "Z"), m);
    ElementSet some = eval_mu(diamond_star("a", F::atom("p"), "Z"), m);
    for (std::size_t x = 0; x < n; ++x) {
      bool every = true, any = false;
      for (std::size_t y = 0; y < n; ++y)
        if (reach[x][y]) {
          every = every && g.in("p", y);
          any = any || g.in("p", y);
        }
      CHECK(all.contains(x) == every);
      CHECK(some.contains(x) == any);
    }
  }
}

TEST_CASE("translation q") {
  Concept c = parse_concept("mu X. exists child. X");
  CHECK(translate_q(c) == F::mu("X", F::diamond("child", F::var("X"))));
  CHECK(translate_q(Concept::top()) == F::top());
  CHECK(translate_q(parse_concept("forall r. not a")) == F::box("r", F::negation(F::atom("a"))));
  CHECK_THROWS_AS(translate_q(parse_concept("atleast 1 r. a")), NumberRestrictionPresent);

  Interpretation empty = Interpretation::canonical(1);
  KripkeStructure k = kripke_of_interpretation(empty);
  CHECK(k.size() == 1);
  CHECK(k.relations().empty());

  Interpretation list = parse_model("domain: [n1, n2, e]\nconcept node: [n1, n2]\nrole succ: [(n1,n2), (n2,e)]\n");
  KripkeStructure lk = kripke_of_interpretation(list);
  CHECK(lk.states() == list.domain());
  CHECK(interpretation_of_kripke(lk) == list);
}

TEST_CASE("translation u shapes") {
  auto u = translate_u(parse_concept("atleast 1 r. a"));
  CHECK(u.fresh_roles == std::map<std::string, std::string>{{"r", "r_new"}});
  CHECK(alpha_equivalent(u.formula, F::diamond("r", diamond_star("r_new", F::atom("a"), "Z"))));

  auto zero = translate_u(parse_concept("atmost 0 r. a"));
  CHECK(alpha_equivalent(zero.formula, F::box("r", box_star("r_new", F::negation(F::atom("a")), "Z"))));

  CHECK(translate_u(parse_concept("atleast 0 r. a")).formula == F::top());

  auto clash = translate_u(parse_concept("exists r. r_new"));
  CHECK(clash.fresh_roles.at("r") == "r_new_1");

  auto plain = translate_u(parse_concept("exists r. a"));
  CHECK(alpha_equivalent(plain.formula, F::diamond("r", diamond_star("r_new", F::atom("a"), "Z"))));
  CHECK(is_well_formed(translate_u(parse_concept("mu X. atmost 2 r. not X")).formula));
}

TEST_CASE("chained tree models") {
  Interpretation one({"x", "y"});
  one.add_edge("r", 0, 1);
  ChainedTree single = chain_tree_model(one, 0);
  CHECK(single.structure.relation("r")->contains(0, 1));
  CHECK(single.structure.relation("r_new")->empty());

  Interpretation three({"x", "z1", "z2", "z3"});
  for (std::size_t k = 1; k <= 3; ++k) three.add_edge("r", 0, k);
  ChainedTree t = chain_tree_model(three, 0);
  CHECK(t.structure.relation("r")->pairs() == std::vector<std::pair<std::size_t, std::size_t>>{{0, 1}});
  CHECK(t.structure.relation("r_new")->pairs() ==
        std::vector<std::pair<std::size_t, std::size_t>>{{1, 2}, {2, 3}});
  CHECK_FALSE(check_deterministic(t.structure).has_value());
  Interpretation back = collapse_chains(t.structure, {{"r", "r_new"}});
  CHECK(*back.role_extension("r") == *three.role_extension("r"));

  Interpretation part({"a", "b", "c"});
  part.add_edge("r", 1, 2);
  ChainedTree sub = chain_tree_model(part, 1);
  CHECK(sub.original_index == std::vector<std::size_t>{1, 2});

  Interpretation diamond({"a", "b", "c", "d"});
  diamond.add_edge("r", 0, 1);
  diamond.add_edge("r", 0, 2);
  diamond.add_edge("s", 1, 3);
  diamond.add_edge("s", 2, 3);
  CHECK_THROWS_AS(chain_tree_model(diamond, 0), NotATree);
  Interpretation loop({"a"});
  loop.add_edge("r", 0, 0);
  CHECK_THROWS_AS(chain_tree_model(loop, 0), NotATree);
}

TEST_CASE("u preserves extensions on random trees, checked against the reference semantics") {
  Rng rng(41);
  ConceptShape shape{{"a", "b"}, {"r", "s"}, {}, {"X", "Y"}, 2, 2};
  for (int k = 0; k < 150; ++k) {
    Interpretation tree = random_tree(rng, 2, 2, {{"a", "b"}, {"r", "s"}});
    Concept c = random_concept(rng, shape);
    TranslationResult u = translate_u(c);
    ChainedTree chained = chain_tree_model(tree, 0, u.fresh_roles);
    if (chained.structure.size() > 4) continue;
    auto expected = oracle::eval(c, oracle::graph_of(tree), {});
    auto got = oracle::eval(u.formula, oracle::graph_of(chained.structure), {});
    INFO(print_concept(c));
    for (std::size_t s = 0; s < chained.structure.size(); ++s) CHECK(got[s] == expected[chained.original_index[s]]);
  }
}
