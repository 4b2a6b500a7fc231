#include <doctest.h>

#include "pregame/laws.hpp"

using namespace pregame;

TEST_CASE("law suites pass on several seeds") {
  for (std::uint64_t seed : {1u, 7u, 99u}) {
    CAPTURE(seed);
    for (const auto& o : run_law_suites(seed, 30)) {
      CAPTURE(o.law);
      CHECK(o.ok());
      CHECK(o.total > 0);
      CHECK(o.counterexamples.empty());
    }
  }
}

TEST_CASE("suite sizes") {
  CHECK(check_identity_laws(3, 12).total == 12);
  CHECK(check_associativity(3, 12).total == 12);
  CHECK(check_interchange(3, 12).total == 12);
  // Two involutions per pair of sets of size 1..2, then co- and contravariant
  // naturality for each of the 8 x 8 function pairs.
  CHECK(check_symmetry(2).total == 2 * 4 + 2 * 64);
  CHECK(check_teleological_naturality({{3, 3}}).total == 27);
  CHECK(check_teleological_naturality({{2, 3}, {3, 2}}).total == 9 + 8);
  CHECK(all_shapes(3).size() == 9);
}

TEST_CASE("generator is deterministic") {
  PregameGenerator a(42);
  PregameGenerator b(42);
  for (int i = 0; i < 50; ++i) {
    const Pregame g = a.any();
    const Pregame h = b.any();
    CHECK(g.term() == h.term());
    CHECK(g.signature() == h.signature());
    CHECK(extensionally_equal(g, h));
  }
}

TEST_CASE("generated pregames stay within budget and vary") {
  PregameGenerator gen(5);
  std::size_t with_strategies = 0;
  std::size_t with_contra = 0;
  for (int i = 0; i < 200; ++i) {
    const Pregame g = gen.any();
    CHECK(extensional_cost(g) <= gen.budget());
    with_strategies += g.profile_count() > 1;
    with_contra += !g.domain().contra.empty() || !g.codomain().contra.empty();
  }
  CHECK(with_strategies > 40);
  CHECK(with_contra > 40);
}

TEST_CASE("generated pregames start at the requested domain") {
  PregameGenerator gen(11);
  for (int i = 0; i < 50; ++i) {
    const Interface dom = gen.interface();
    CHECK(gen.from(dom).domain() == dom);
  }
}

TEST_CASE("the comparison sees a single changed verdict") {
  PregameGenerator gen(8);
  int checked = 0;
  for (int i = 0; i < 60 && checked < 20; ++i) {
    const Pregame g = gen.any();
    const Index nk = function_count(g.codomain().cov, g.codomain().contra);
    if (nk == 0 || g.profile_count() == 0 || cardinality(g.domain().cov) == 0) continue;
    const Index sigma = g.profile_count() - 1;
    const FinFun target = function_at(g.codomain().cov, g.codomain().contra, nk - 1);
    const Pregame tweaked(
        g.domain(), g.codomain(), g.strategy_components(),
        [g](Index s, Index x) { return g.play(s, x); },
        [g](Index s, Index x, Index r) { return g.coplay(s, x, r); },
        [g, sigma, target](Index s, Index x, const FinFun& k) {
          const bool v = g.rational(s, x, k);
          return (s == sigma && x == 0 && k == target) ? !v : v;
        },
        "tweaked");
    CHECK(first_difference(g, tweaked).has_value());
    ++checked;
  }
  CHECK(checked == 20);
}

TEST_CASE("reports are stable text") {
  const auto a = format_report(run_law_suites(7, 10), 7, 10);
  const auto b = format_report(run_law_suites(7, 10), 7, 10);
  CHECK(a == b);
  CHECK(a.rfind("laws: seed 7, 10 iterations\n", 0) == 0);
  CHECK(a.find("all laws hold\n") != std::string::npos);

  LawOutcome broken;
  broken.law = "demo";
  broken.total = 2;
  broken.passed = 1;
  broken.counterexamples.push_back("f vs g: play differs");
  const auto c = format_report({broken}, 1, 1);
  CHECK(c.find("demo: 1/2 passed\n  counterexample: f vs g: play differs\n") != std::string::npos);
  CHECK(c.find("some laws FAILED") != std::string::npos);
}
