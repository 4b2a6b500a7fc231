#include <doctest.h>

#include "pregame/agents.hpp"
#include "pregame/core.hpp"

using namespace pregame;

namespace {

const FinSet ab("AB", {"a", "b"});
const FinSet bit("Bit", {"0", "1"});
const FinSet move("Move", {"C", "D"});
const FinSet u("U", {"0", "1", "2", "3"});
const FinSet three("Three", {"0", "1", "2"});

const FinFun& unit_k() {
  static const FinFun k({}, {}, {0});
  return k;
}

bool always(const FinFun&, Index, const FinFun&) { return true; }

}  // namespace

TEST_CASE("identity on the unit interface") {
  const Pregame id = identity(Interface{});
  CHECK(id.profile_count() == 1);
  CHECK(id.rational(0, 0, unit_k()));
  CHECK(id.signature() == "1 ⊗ 1* → 1 ⊗ 1*");
}

TEST_CASE("identity play and coplay") {
  const Pregame forward = identity(Interface{{ab}, {}});
  CHECK(forward.play(0, 0) == 0);
  CHECK(forward.play(0, 1) == 1);
  const Pregame backward = identity(Interface{{}, {bit}});
  CHECK(backward.coplay(0, 0, 0) == 0);
  CHECK(backward.coplay(0, 0, 1) == 1);
}

TEST_CASE("decision strategy spaces") {
  CHECK(decision("P", {}, {move}, {u}, always).profile_count() == 2);
  CHECK(decision("P", {ab}, {move}, {}, always).profile_count() == 4);
  CHECK(decision("P", {ab, bit}, {three}, {}, always).profile_count() == 81);
  CHECK(strategy_label({}, {move}, 1) == "D");
  CHECK(strategy_label({ab}, {move}, 1) == "{a->C, b->D}");
  CHECK_THROWS_AS(decision("P", {}, {FinSet("Empty", {})}, {}, always), Error);
  try {
    decision("P", {u, u, u}, {u}, {}, always, Caps{10, 10, 10});
    FAIL("expected DomainTooLarge");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::DomainTooLarge);
  }
}

TEST_CASE("decision play applies the strategy table") {
  const Pregame d = decision("P", {ab}, {move}, {u}, always);
  for (Index s = 0; s < 4; ++s) {
    const FinFun table = function_at({ab}, {move}, s);
    for (Index x = 0; x < 2; ++x) CHECK(d.play(s, x) == table(x));
  }
}

TEST_CASE("utility-maximizing decisions") {
  const Pregame d = decision_from_selection("P", {}, {move}, {u}, argmax_selection({move}, {u}));
  for (const auto& k : enumerate_functions({move}, {u})) {
    const Index best = std::max(k(0), k(1));
    for (Index s = 0; s < 2; ++s) CHECK(d.rational(s, 0, k) == (k(s) == best));
  }
}

TEST_CASE("computations and cocomputations") {
  const FinFun f({ab}, {three}, {2, 0});
  CHECK(extensionally_equal(computation(identity_fun({ab})), identity(Interface{{ab}, {}})));
  CHECK(extensionally_equal(cocomputation(identity_fun({ab})), identity(Interface{{}, {ab}})));
  const Pregame co = cocomputation(f);
  CHECK(co.domain() == Interface{{}, {three}});
  CHECK(co.codomain() == Interface{{}, {ab}});
  for (Index x = 0; x < 2; ++x) CHECK(co.coplay(0, 0, x) == f(x));
  const Pregame copy = computation(copy_fun({ab}));
  CHECK(copy.codomain() == Interface{{ab, ab}, {}});
  CHECK(tuple_label({ab, ab}, copy.play(0, 1)) == "(b, b)");
}

TEST_CASE("teleological unit") {
  const Pregame tau = teleological_unit({ab, bit});
  CHECK(tau.domain() == Interface{{ab, bit}, {ab, bit}});
  CHECK(tau.codomain() == Interface{});
  for (Index x = 0; x < 4; ++x) CHECK(tau.coplay(0, x, 0) == x);
  CHECK(extensionally_equal(teleological_unit({}), identity(Interface{})));
}

TEST_CASE("the outcome cup feeds q(x, y) back to both players") {
  const FinFun q = FinFun::tabulate({move, move}, {u}, [](Index i) { return (i * 3 + 1) % 4; });
  const Pregame rules = tensor(computation(q, "q"), cocomputation(copy_fun({u}), "copy"));
  const Pregame g = compose(teleological_unit({u}), rules);
  CHECK(g.domain() == Interface{{move, move}, {u, u}});
  for (Index xy = 0; xy < 4; ++xy) {
    CHECK(g.coplay(0, xy, 0) == pair_rank(q(xy), q(xy), 4));
  }
}

TEST_CASE("composition of computations is the computation of the composite") {
  for (const auto& f : enumerate_functions({ab}, {three})) {
    for (const auto& g : enumerate_functions({three}, {bit})) {
      CHECK(extensionally_equal(compose(computation(g), computation(f)),
                                computation(compose_fun(g, f))));
      CHECK(extensionally_equal(compose(cocomputation(f), cocomputation(g)),
                                cocomputation(compose_fun(g, f))));
    }
  }
}

TEST_CASE("tensor of computations is the product computation") {
  for (const auto& f : enumerate_functions({ab}, {bit})) {
    for (const auto& g : enumerate_functions({bit}, {three})) {
      CHECK(extensionally_equal(tensor(computation(f), computation(g)),
                                computation(product_fun(f, g))));
    }
  }
  const Interface i{{ab}, {bit}};
  const Interface j{{three}, {}};
  CHECK(extensionally_equal(tensor(identity(i), identity(j)), identity(i * j)));
}

TEST_CASE("tensor of two players unfolds to both selection conditions") {
  const FinSet r("R", {"0", "1", "2"});
  const auto eps = argmax_selection({move}, {r});
  const auto delta = SelectionFunction({move}, {r}, [](const FinFun& k) {
    return k(0) == k(1) ? std::vector<Index>{0, 1} : std::vector<Index>{k(0) < k(1) ? 0u : 1u};
  });
  const Pregame both = tensor(decision_from_selection("P1", {}, {move}, {r}, eps),
                              decision_from_selection("P2", {}, {move}, {r}, delta));
  CHECK(both.codomain() == Interface{{move, move}, {r, r}});
  for (const auto& k : enumerate_functions({move, move}, {r, r})) {
    for (Index s = 0; s < 4; ++s) {
      const Index s1 = s / 2;
      const Index s2 = s % 2;
      const FinFun k1 = FinFun::tabulate({move}, {r}, [&](Index y1) {
        return first_of(k(pair_rank(y1, s2, 2)), 3);
      });
      const FinFun k2 = FinFun::tabulate({move}, {r}, [&](Index y2) {
        return second_of(k(pair_rank(s1, y2, 2)), 3);
      });
      CHECK(both.rational(s, 0, k) == (eps.selects(k1, s1) && delta.selects(k2, s2)));
    }
  }
}

TEST_CASE("composition checks interfaces") {
  const Pregame f = computation(FinFun({ab}, {bit}, {0, 1}));
  const Pregame g = computation(FinFun({three}, {ab}, {0, 1, 0}));
  try {
    compose(g, f);
    FAIL("expected InterfaceMismatch");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::InterfaceMismatch);
    CHECK(std::string(e.what()).find("Bit ⊗ 1*") != std::string::npos);
    CHECK(std::string(e.what()).find("Three ⊗ 1*") != std::string::npos);
  }
}

TEST_CASE("structural pregames") {
  const FinSet solo("Solo", {"s"});
  const Interface i{{ab, bit, three}, {bit, solo}};
  CHECK(extensionally_equal(structural(i, {0, 1, 2}, {0, 1}), identity(i)));
  const Pregame p = structural(i, {2, 0, 1}, {1, 0});
  CHECK(p.codomain() == Interface{{three, ab, bit}, {solo, bit}});
  const Pregame back = structural(p.codomain(), {1, 2, 0}, {1, 0});
  CHECK(extensionally_equal(compose(back, p), identity(i)));
  CHECK(extensionally_equal(compose(swap({bit}, {ab}), swap({ab}, {bit})),
                            identity(Interface{{ab, bit}, {}})));
  CHECK(extensionally_equal(compose(coswap({bit}, {ab}), coswap({ab}, {bit})),
                            identity(Interface{{}, {ab, bit}})));
  CHECK_THROWS_AS(structural(i, {0, 1}, {0, 1}), Error);
}

TEST_CASE("equilibria of closed games") {
  const Pregame all = tensor(decision("A", {}, {three}, {}, always), decision("B", {}, {ab}, {}, always));
  CHECK(is_closed(all));
  CHECK(equilibrium_ranks(all).size() == 6);
  const auto eqs = equilibria(all);
  REQUIRE(eqs.size() == 6);
  CHECK(eqs[5].components == std::vector<Index>{2, 1});
  CHECK(profile_labels(all, 5) == std::vector<std::string>{"2", "b"});

  const Pregame none = decision("A", {}, {three}, {}, [](const FinFun&, Index, const FinFun&) {
    return false;
  });
  CHECK(equilibria(none).empty());
}

TEST_CASE("equilibria reject open games") {
  const FinSet r("R", {"0", "1"});
  const Pregame open = decision("P", {}, {ab}, {r}, always);
  try {
    equilibria(open);
    FAIL("expected NotClosed");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::NotClosed);
    CHECK(std::string(e.what()) == "game is not closed: codomain has contravariant port R");
  }
  try {
    equilibria(identity(Interface{{ab}, {}}));
    FAIL("expected NotClosed");
  } catch (const Error& e) {
    CHECK(std::string(e.what()).find("domain has covariant port AB") != std::string::npos);
  }
}

TEST_CASE("extensional equality distinguishes behaviour") {
  const FinFun f({ab}, {bit}, {0, 1});
  const FinFun g({ab}, {bit}, {1, 1});
  CHECK(extensionally_equal(computation(f), computation(f)));
  CHECK_FALSE(extensionally_equal(computation(f), computation(g)));
  CHECK_FALSE(extensionally_equal(cocomputation(f), cocomputation(g)));
  CHECK(first_difference(computation(f), computation(g)).has_value());

  const FinSet r("R", {"0", "1"});
  const Pregame d1 = decision_from_selection("P", {}, {ab}, {r}, argmax_selection({ab}, {r}));
  const Pregame d2 = decision("P", {}, {ab}, {r}, always);
  CHECK(extensionally_equal(d1, d1));
  CHECK_FALSE(extensionally_equal(d1, d2));
  CHECK_FALSE(extensionally_equal(d1, computation(identity_fun({ab}))));
}

TEST_CASE("component permutations in extensional equality") {
  const Pregame a = decision("A", {}, {three}, {}, [](const FinFun& s, Index, const FinFun&) {
    return s(0) == 2;
  });
  const Pregame b = decision("B", {}, {ab}, {}, [](const FinFun& s, Index, const FinFun&) {
    return s(0) == 0;
  });
  // Same behaviour, but Σ lists A before B on the left and B before A on the right.
  const Pregame lhs = compose(swap({three}, {ab}), tensor(a, b));
  const Pregame rhs = tensor(b, a);
  CHECK_FALSE(extensionally_equal(lhs, rhs));
  CHECK(extensionally_equal(lhs, rhs, std::vector<std::size_t>{1, 0}));
  CHECK(equilibria(lhs).size() == 1);
  CHECK(profile_labels(lhs, equilibrium_ranks(lhs)[0]) == std::vector<std::string>{"2", "a"});
}

TEST_CASE("extensional cost") {
  const FinSet r("R", {"0", "1", "2"});
  const Pregame d = decision("P", {ab}, {bit}, {r}, always);
  // |Σ| = 4, |X| = 2, |R^Y| = 9.
  CHECK(extensional_cost(d) == 72);
}
