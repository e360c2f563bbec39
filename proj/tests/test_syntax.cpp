#include <doctest.h>

#include "mualcq/errors.hpp"
#include "mualcq/evaluate.hpp"
#include "mualcq/generate.hpp"
#include "mualcq/parser.hpp"
#include "mualcq/syntax.hpp"
#include "oracle.hpp"

using namespace mualcq;

namespace {

Concept A(const char* n) { return Concept::atomic(n); }
Concept V(const char* n) { return Concept::var(n); }

}  // namespace

TEST_CASE("list definition parses into the expected tree") {
  Concept c = parse_concept("mu X. emptylist or (node and atmost 1 succ. top and exists succ. X)");
  Concept expected = Concept::mu(
      "X", Concept::disj(A("emptylist"),
                         Concept::conj(Concept::conj(A("node"), Concept::at_most(1, "succ", Concept::top())),
                                       Concept::exists("succ", V("X")))));
  CHECK(c == expected);
  CHECK(parse_concept("top") == Concept::top());
}

TEST_CASE("parser reports positions and positivity violations") {
  CHECK_THROWS_AS(parse_concept("mu X. atmost 1 r. X"), WellFormednessError);
  CHECK_THROWS_AS(parse_concept("mu X. not X"), WellFormednessError);
  try {
    parse_concept("a and\n  (b or");
    FAIL("expected a parse error");
  } catch (const ParseError& e) {
    CHECK(e.line() == 2);
  }
  CHECK_THROWS_AS(parse_concept("exists . a"), ParseError);
  CHECK_THROWS_AS(parse_concept("atleast r. a"), ParseError);
}

TEST_CASE("identifiers become variables only under a binder or a free header") {
  CHECK(parse_concept("X").kind() == ConceptKind::Atomic);
  CHECK(parse_concept("free X; X").kind() == ConceptKind::Var);
  Concept c = parse_concept("mu X. exists r. X");
  CHECK(c.body().child().kind() == ConceptKind::Var);
}

TEST_CASE("shadowed binders are renamed apart") {
  Concept c = parse_concept("mu X. a or exists r. (nu X. b and forall r. X)");
  const Concept& inner = c.body().rhs().child();
  REQUIRE(inner.kind() == ConceptKind::Nu);
  CHECK(inner.name() != "X");
  CHECK(alpha_equivalent(c, Concept::mu("X", Concept::disj(A("a"), Concept::exists("r", Concept::nu("Y", Concept::conj(
                                                                                          A("b"), Concept::forall("r", V("Y")))))))));
}

TEST_CASE("tbox parsing") {
  CHECK(parse_tbox("emptylist <= not node").size() == 1);
  CHECK(parse_tbox("").empty());
  CHECK(parse_tbox("# only a comment\n\n").empty());
  TBox k = parse_tbox("human == mammal and exists parent. top and forall parent. human");
  REQUIRE(k.size() == 2);
  CHECK(k.assertions[0].lhs == k.assertions[1].rhs);
  CHECK(k.assertions[0].rhs == k.assertions[1].lhs);
  TBox open;
  open.add(Concept::var("X"), A("a"));
  CHECK_THROWS_AS(check_closed(open), ClosednessError);
  CHECK_THROWS_AS(parse_tbox("free X; X <= a"), ParseError);
  CHECK_THROWS_AS(parse_tbox("a <="), ParseError);
}

TEST_CASE("printing") {
  CHECK(print_concept(Concept::top()) == "top");
  CHECK(print_concept(Concept::mu("X", Concept::exists("child", V("X")))) == "mu X. exists child. X");
  CHECK(print_concept(Concept::negation(Concept::conj(A("a"), A("b")))) == "not (a and b)");
  CHECK(print_concept(V("X")) == "free X; X");
}

TEST_CASE("print then parse is alpha-equivalent on random concepts") {
  Rng rng(7);
  ConceptShape shape;
  shape.max_depth = 5;
  shape.free_vars = {"V"};
  for (int k = 0; k < 500; ++k) {
    Concept c = random_concept(rng, shape);
    INFO(print_concept(c));
    CHECK(alpha_equivalent(parse_concept(print_concept(c)), c));
  }
}

TEST_CASE("free variables") {
  CHECK(free_variables(V("X")) == std::set<std::string>{"X"});
  CHECK(free_variables(Concept::mu("X", Concept::exists("r", V("X")))).empty());
  CHECK(free_variables(Concept::nu("X", Concept::conj(V("X"), V("Y")))) == std::set<std::string>{"Y"});
  CHECK(fresh_name("X", {"X", "X_1"}) == "X_2");
  CHECK(fresh_name("X", {"Y"}) == "X");
}

TEST_CASE("substitution") {
  CHECK(substitute(V("X"), "X", Concept::top()) == Concept::top());
  Concept bound = Concept::mu("X", V("X"));
  CHECK(substitute(bound, "X", A("a")) == bound);

  Concept c = Concept::nu("Y", Concept::conj(V("X"), V("Y")));
  Concept d = Concept::exists("r", V("Y"));
  Concept s = substitute(c, "X", d);
  REQUIRE(s.kind() == ConceptKind::Nu);
  CHECK(s.name() != "Y");
  CHECK(alpha_equivalent(s, Concept::nu("W", Concept::conj(d, V("W")))));
  CHECK(free_variables(s) == std::set<std::string>{"Y"});

  // Capture would change the value: Y = {d2}, r = {(d1,d2)}.
  Interpretation i = Interpretation::canonical(2);
  i.add_edge("r", 0, 1);
  Valuation rho{{"Y", ElementSet::of(2, {1})}};
  Valuation updated = rho;
  updated.insert_or_assign("X", evaluate(d, i, rho));
  CHECK(evaluate(s, i, rho) == evaluate(c, i, updated));
  CHECK(evaluate(s, i, rho) == ElementSet::of(2, {0}));
}

TEST_CASE("polarity") {
  CHECK(polarity_of(Concept::negation(V("X")), "X") == Polarity::Negative);
  CHECK(polarity_of(Concept::at_most(1, "r", V("X")), "X") == Polarity::Negative);
  CHECK(polarity_of(Concept::at_least(1, "r", V("X")), "X") == Polarity::Positive);
  CHECK(polarity_of(Concept::conj(V("X"), Concept::negation(V("X"))), "X") == Polarity::Both);
  CHECK(polarity_of(A("a"), "X") == Polarity::Absent);
  CHECK(polarity_of(Concept::mu("X", V("X")), "X") == Polarity::Absent);
  CHECK(polarity_of(Concept::at_most(2, "r", Concept::negation(V("X"))), "X") == Polarity::Positive);
}

TEST_CASE("well-formedness") {
  CHECK(is_well_formed(Concept::mu("X", Concept::exists("r", V("X")))));
  CHECK_FALSE(is_well_formed(Concept::mu("X", Concept::negation(V("X")))));
  CHECK_THROWS_AS(check_well_formed(Concept::mu("X", Concept::negation(V("X")))), WellFormednessError);
  Concept c = Concept::nu("X", Concept::at_least(2, "r", V("X")));
  CHECK(is_well_formed(c));

  // The induced operator is monotone on every 3-element interpretation with
  // a single role: compare all pairs E1 <= E2.
  Concept body = Concept::at_least(2, "r", V("X"));
  for (std::uint64_t idx = 0; idx < 512; ++idx) {
    Interpretation i = Interpretation::canonical(3);
    for (std::size_t a = 0; a < 3; ++a)
      for (std::size_t b = 0; b < 3; ++b)
        if ((idx >> (a * 3 + b)) & 1U) i.add_edge("r", a, b);
    i.declare_role("r");
    for (std::size_t e1 = 0; e1 < 8; ++e1)
      for (std::size_t e2 = 0; e2 < 8; ++e2) {
        if ((e1 & ~e2) != 0) continue;
        ElementSet s1(3), s2(3);
        for (std::size_t k = 0; k < 3; ++k) {
          if ((e1 >> k) & 1U) s1.insert(k);
          if ((e2 >> k) & 1U) s2.insert(k);
        }
        REQUIRE(evaluate(body, i, {{"X", s1}}).subset_of(evaluate(body, i, {{"X", s2}})));
      }
  }
}

TEST_CASE("positivity soundness on random contexts") {
  Rng rng(11);
  ConceptShape shape;
  shape.binder_names = {"Y", "Z"};
  const Signature sig{{"a", "b"}, {"r", "s"}};
  for (int k = 0; k < 300; ++k) {
    bool positive = k % 2 == 0;
    Concept c = random_context(rng, shape, "X", positive);
    Interpretation i = random_interpretation(rng, 3, sig);
    ElementSet e1 = random_subset(rng, 3);
    ElementSet e2 = e1 | random_subset(rng, 3);
    ElementSet v1 = evaluate(c, i, {{"X", e1}});
    ElementSet v2 = evaluate(c, i, {{"X", e2}});
    INFO(print_concept(c));
    CHECK(polarity_of(c, "X") == (positive ? Polarity::Positive : Polarity::Negative));
    CHECK((positive ? v1.subset_of(v2) : v2.subset_of(v1)));
  }
}

TEST_CASE("compound roles desugar into plain concepts") {
  CHECK(alpha_equivalent(parse_concept("exists (r*). a"),
                         Concept::mu("X", Concept::disj(A("a"), Concept::exists("r", V("X"))))));
  CHECK(alpha_equivalent(parse_concept("forall r*. a"),
                         Concept::nu("X", Concept::conj(A("a"), Concept::forall("r", V("X"))))));
  CHECK(alpha_equivalent(parse_concept("wf(r)"), Concept::mu("X", Concept::forall("r", V("X")))));
  CHECK(parse_concept("exists id(a). b") == Concept::conj(A("b"), A("a")));
  CHECK(parse_concept("exists r;s. a") == Concept::exists("r", Concept::exists("s", A("a"))));
  CHECK(parse_concept("exists r|s. a") == Concept::disj(Concept::exists("r", A("a")), Concept::exists("s", A("a"))));
  CHECK_THROWS_AS(parse_concept("atmost 1 r;s. a"), UnsupportedRole);
  CHECK_THROWS_AS(parse_concept("exists r^-. a"), InverseRoleUnsupported);
}

TEST_CASE("desugared star agrees with graph reachability") {
  Rng rng(3);
  Concept c = parse_concept("exists r*. a");
  for (int k = 0; k < 200; ++k) {
    auto n = static_cast<std::size_t>(1 + k % 5);
    Interpretation i = random_interpretation(rng, n, {{"a"}, {"r"}}, 0.3);
    auto g = oracle::graph_of(i);
    auto reach = oracle::reachability(g, "r");
    ElementSet got = evaluate(c, i);
    for (std::size_t x = 0; x < n; ++x) {
      bool expected = false;
      for (std::size_t y = 0; y < n; ++y) expected = expected || (reach[x][y] && g.in("a", y));
      CHECK(got.contains(x) == expected);
    }
  }
}

TEST_CASE("fixpoint duality") {
  Concept nu = Concept::nu("X", Concept::exists("r", V("X")));
  Concept expected = Concept::negation(
      Concept::mu("X", Concept::negation(Concept::exists("r", Concept::negation(V("X"))))));
  CHECK(alpha_equivalent(dual_fixpoint(nu), expected));
  CHECK_THROWS_AS(dual_fixpoint(A("a")), NotAFixpoint);

  Rng rng(5);
  Concept identity = dual_fixpoint(Concept::mu("X", V("X")));
  ConceptShape shape;
  shape.binder_names = {"Y"};
  for (int k = 0; k < 200; ++k) {
    Interpretation i = random_interpretation(rng, 3, {{"a", "b"}, {"r", "s"}});
    CHECK(evaluate(identity, i).empty());
    Concept fix = Concept::nu("X", random_context(rng, shape, "X", true));
    Concept dual = dual_fixpoint(fix);
    CHECK(is_well_formed(dual));
    CHECK(evaluate(fix, i) == evaluate(dual, i));
  }
}

TEST_CASE("alpha-renaming a binder preserves the extension") {
  Rng rng(9);
  ConceptShape shape;
  shape.binder_names = {"Y"};
  for (int k = 0; k < 200; ++k) {
    Concept body = random_context(rng, shape, "X", true);
    Concept a = Concept::mu("X", body);
    Concept b = Concept::mu("W", substitute(body, "X", V("W")));
    Interpretation i = random_interpretation(rng, 3, {{"a", "b"}, {"r", "s"}});
    CHECK(alpha_equivalent(a, b));
    CHECK(evaluate(a, i) == evaluate(b, i));
    CHECK(oracle::to_set(evaluate(a, i)) == oracle::eval(b, oracle::graph_of(i), {}));
  }
}
