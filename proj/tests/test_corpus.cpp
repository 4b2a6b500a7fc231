#include <doctest.h>

#include <fstream>
#include <set>
#include <sstream>

#include "oracles.hpp"
#include "pregame/corpus.hpp"
#include "pregame/dsl/checker.hpp"

using namespace pregame;

namespace {

std::string corpus_file(const std::string& name) {
  std::ifstream in(std::string(PREGAME_CORPUS_DIR) + "/" + name, std::ios::binary);
  REQUIRE_MESSAGE(in, "cannot open " << name);
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

const ClassicInstance& instance(const std::string& name) {
  static const auto all = classic_instances();
  for (const auto& i : all) {
    if (i.name == name) return i;
  }
  FAIL("no instance " << name);
  return all.front();
}

std::set<std::vector<std::string>> equilibrium_labels(const Pregame& g) {
  std::set<std::vector<std::string>> out;
  for (auto s : equilibrium_ranks(g)) out.insert(profile_labels(g, s));
  return out;
}

oracle::Bimatrix bimatrix(const FinFun& q) {
  const std::size_t rows = q.dom()[0].size();
  const std::size_t cols = q.dom()[1].size();
  oracle::Bimatrix m(rows, std::vector<oracle::Payoff>(cols));
  for (std::size_t i = 0; i < rows; ++i) {
    for (std::size_t j = 0; j < cols; ++j) {
      const auto labels = pregame::labels(q.cod(), q(pair_rank(i, j, cols)));
      m[i][j] = {std::stol(labels[0]), std::stol(labels[1])};
    }
  }
  return m;
}

std::set<std::vector<std::string>> oracle_nash_labels(const FinFun& q) {
  std::set<std::vector<std::string>> out;
  for (const auto& [i, j] : oracle::pure_nash(bimatrix(q))) {
    out.insert({q.dom()[0].label(i), q.dom()[1].label(j)});
  }
  return out;
}

}  // namespace

TEST_CASE("classic instances are shipped as files") {
  const auto all = classic_instances();
  REQUIRE(all.size() == 4);
  CHECK(all[0].name == "prisoners_dilemma");
  CHECK(all[1].name == "matching_pennies");
  CHECK(all[2].name == "coordination");
  CHECK(all[3].name == "two_stage_sequential");
  for (const auto& i : all) {
    CAPTURE(i.name);
    const auto env = dsl::load(corpus_file(i.file));
    CHECK(env.games.count(i.game) == 1);
  }
}

TEST_CASE("source files elaborate to the programmatic diagrams") {
  for (const auto& i : classic_instances()) {
    CAPTURE(i.name);
    const auto env = dsl::load(corpus_file(i.file));
    const Pregame from_source = dsl::elaborate_game(env, i.game);
    const Pregame built = diagram(i);
    CHECK(from_source.domain() == built.domain());
    CHECK(from_source.codomain() == built.codomain());
    CHECK(from_source.strategy_components() == built.strategy_components());
    const auto diff = first_difference(from_source, built);
    CHECK_MESSAGE(!diff, (diff ? *diff : ""));
  }
}

// Expected sets below were produced by the reference deviation check in
// oracles.hpp and then written down.
TEST_CASE("prisoner's dilemma") {
  const auto& pd = instance("prisoners_dilemma");
  const auto& spec = std::get<SimultaneousGame>(pd.spec);
  const std::set<std::vector<std::string>> expected{{"D", "D"}};
  CHECK(oracle_nash_labels(spec.outcome) == expected);
  const Pregame g = diagram(pd);
  CHECK(g.profile_count() == 4);
  CHECK(is_closed(g));
  CHECK(equilibrium_labels(g) == expected);
}

TEST_CASE("matching pennies") {
  const auto& mp = instance("matching_pennies");
  CHECK(oracle_nash_labels(std::get<SimultaneousGame>(mp.spec).outcome).empty());
  CHECK(equilibrium_labels(diagram(mp)).empty());
}

TEST_CASE("coordination") {
  const auto& co = instance("coordination");
  const std::set<std::vector<std::string>> expected{{"A", "A"}, {"B", "B"}};
  CHECK(oracle_nash_labels(std::get<SimultaneousGame>(co.spec).outcome) == expected);
  CHECK(equilibrium_labels(diagram(co)) == expected);
}

TEST_CASE("entry deterrence: an equilibrium that is not optimal") {
  const auto& entry = instance("two_stage_sequential");
  const auto& spec = std::get<SequentialGame>(entry.spec);
  const Pregame g = diagram(entry);
  CHECK(g.profile_count() == 8);

  const std::set<std::vector<std::string>> expected_eq{
      {"In", "{Out->Fight, In->Share}"},
      {"In", "{Out->Share, In->Share}"},
      {"Out", "{Out->Fight, In->Fight}"},
      {"Out", "{Out->Share, In->Fight}"}};
  const std::set<std::vector<std::string>> expected_opt{
      {"In", "{Out->Fight, In->Share}"},
      {"In", "{Out->Share, In->Share}"}};

  const auto m = bimatrix(spec.outcome);
  auto named = [&](const std::set<oracle::SequentialProfile>& ps) {
    std::set<std::vector<std::string>> out;
    for (const auto& [x, reply] : ps) {
      out.insert({spec.first[0].label(x),
                  strategy_label(spec.first, spec.second, oracle::reply_rank(reply, 2))});
    }
    return out;
  };
  CHECK(named(oracle::sequential_equilibria(m)) == expected_eq);
  CHECK(named(oracle::backward_induction(m)) == expected_opt);

  CHECK(equilibrium_labels(g) == expected_eq);
  std::set<std::vector<std::string>> optimal;
  for (const auto& p : optimal_profiles(spec.first, spec.second, spec.phi, spec.psi, spec.outcome)) {
    optimal.insert({spec.first[0].label(p.move), strategy_label(spec.first, spec.second, p.reply)});
  }
  CHECK(optimal == expected_opt);
}

TEST_CASE("sequential diagram with one move each") {
  const FinSet solo("Solo", {"s"});
  const FinSet u("U", {"0", "1"});
  const FinFun q({solo, solo}, {u, u}, {3});
  const Pregame g = sequential_diagram(max_game({solo}, {solo}, q));
  CHECK(g.profile_count() == 1);
  CHECK(equilibrium_ranks(g) == std::vector<Index>{0});
}

TEST_CASE("simultaneous diagram follows arbitrary selection functions") {
  // ε always picks the first row, δ the column matching the outcome at row 0.
  const FinSet rows("Rows", {"r0", "r1"});
  const FinSet cols("Cols", {"c0", "c1", "c2"});
  const FinSet r("R", {"0", "1", "2"});
  const FinFun q = FinFun::tabulate({rows, cols}, {r}, [](Index i) { return (i * 5 + 2) % 3; });
  const SelectionFunction eps({rows}, {r}, [](const FinFun&) { return std::vector<Index>{0}; });
  const SelectionFunction delta({cols}, {r}, [](const FinFun& k) { return std::vector<Index>{k(0)}; });
  const Pregame g = simultaneous_diagram(SimultaneousGame{{rows}, {cols}, eps, delta, q});

  std::vector<std::vector<std::size_t>> table(2, std::vector<std::size_t>(3));
  for (std::size_t i = 0; i < 2; ++i) {
    for (std::size_t j = 0; j < 3; ++j) table[i][j] = q(pair_rank(i, j, 3));
  }
  const auto expected = oracle::selection_equilibria(
      table, [](const std::vector<std::size_t>&) { return std::vector<std::size_t>{0}; },
      [](const std::vector<std::size_t>& k) { return std::vector<std::size_t>{k[0]}; });
  std::set<std::pair<std::size_t, std::size_t>> got;
  for (const auto& t : equilibria(g)) got.emplace(t.components[0], t.components[1]);
  CHECK(got == expected);
  std::set<std::pair<std::size_t, std::size_t>> direct;
  for (const auto& [a, b] : selection_equilibria({rows}, {cols}, eps, delta, q)) direct.emplace(a, b);
  CHECK(direct == expected);
}

TEST_CASE("payoff tables validate labels and shapes") {
  const FinSet m("Move", {"C", "D"});
  const FinSet u("U", {"0", "1"});
  CHECK_THROWS_AS(payoff_table(m, m, u, {{"0", "0"}, {"0", "5"}, {"1", "1"}, {"1", "0"}}), Error);
  CHECK_THROWS_AS(payoff_table(m, m, u, {{"0", "0"}}), Error);
  const FinFun q = payoff_table(m, m, u, {{"0", "0"}, {"0", "1"}, {"1", "1"}, {"1", "0"}});
  CHECK_THROWS_AS(simultaneous_diagram(argmax_game({m, m}, {m}, q)), Error);
}
