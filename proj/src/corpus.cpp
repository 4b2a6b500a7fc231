#include "pregame/corpus.hpp"

namespace pregame {

namespace {

void check_shapes(const PortList& first, const PortList& second, const FinFun& outcome) {
  if (!(outcome.dom() == concat(first, second))) {
    throw Error(ErrorKind::InterfaceMismatch,
                "outcome function " + render_ports(outcome.dom()) + " → " +
                    render_ports(outcome.cod()) + " does not take " +
                    render_ports(concat(first, second)));
  }
}

}  // namespace

Pregame simultaneous_diagram(const SimultaneousGame& g, const Caps& caps) {
  check_shapes(g.first, g.second, g.outcome);
  const PortList& r = g.outcome.cod();
  const Pregame p1 = decision_from_selection("P1", {}, g.first, r, g.eps, caps);
  const Pregame p2 = decision_from_selection("P2", {}, g.second, r, g.delta, caps);
  const Pregame rules = tensor(computation(g.outcome, "q"), cocomputation(copy_fun(r), "copy"));
  return compose(teleological_unit(r), compose(rules, tensor(p1, p2)));
}

Pregame sequential_diagram(const SequentialGame& g, const Caps& caps) {
  check_shapes(g.first, g.second, g.outcome);
  const PortList& x = g.first;
  const PortList& r = g.outcome.cod();
  const Pregame p1 = decision_from_quantifier("P1", {}, x, r, g.phi, caps);
  const Pregame p2 = decision_from_quantifier("P2", x, g.second, r, g.psi, caps);
  const Pregame observe =
      compose(tensor(identity(Interface{x, {}}), p2), computation(copy_fun(x), "copy"));
  const Pregame middle = tensor(observe, identity(Interface{{}, r}));
  const Pregame rules = tensor(computation(g.outcome, "q"), cocomputation(copy_fun(r), "copy"));
  return compose(teleological_unit(r), compose(rules, compose(middle, p1)));
}

SimultaneousGame argmax_game(const PortList& first, const PortList& second,
                             const FinFun& outcome) {
  return SimultaneousGame{first, second, argmax_selection(first, outcome.cod(), 0),
                          argmax_selection(second, outcome.cod(), 1), outcome};
}

SequentialGame max_game(const PortList& first, const PortList& second, const FinFun& outcome) {
  return SequentialGame{first, second, max_quantifier(first, outcome.cod(), 0),
                        max_quantifier(second, outcome.cod(), 1), outcome};
}

UtilityTable utility_table(const PortList& first, const PortList& second,
                           const FinFun& outcome) {
  check_shapes(first, second, outcome);
  return UtilityTable{{first, second}, outcome};
}

FinFun payoff_table(const FinSet& first, const FinSet& second, const FinSet& payoffs,
                    const std::vector<std::pair<std::string, std::string>>& rows) {
  const PortList dom{first, second};
  const PortList cod{payoffs, payoffs};
  std::vector<Index> table;
  for (const auto& [a, b] : rows) {
    auto r = find_tuple(cod, {a, b});
    if (!r) throw Error(ErrorKind::InvalidValue, "payoff (" + a + ", " + b + ") not in " + payoffs.name());
    table.push_back(*r);
  }
  return FinFun(dom, cod, std::move(table));
}

std::vector<ClassicInstance> classic_instances() {
  std::vector<ClassicInstance> out;
  {
    const FinSet move("Move", {"C", "D"});
    const FinSet u("U", {"0", "1", "2", "3"});
    const FinFun q = payoff_table(move, move, u, {{"2", "2"}, {"0", "3"}, {"3", "0"}, {"1", "1"}});
    out.push_back({"prisoners_dilemma", "prisoners_dilemma.pregame", "pd",
                   argmax_game({move}, {move}, q)});
  }
  {
    const FinSet coin("Coin", {"H", "T"});
    const FinSet u("U", {"-1", "1"});
    const FinFun q =
        payoff_table(coin, coin, u, {{"1", "-1"}, {"-1", "1"}, {"-1", "1"}, {"1", "-1"}});
    out.push_back({"matching_pennies", "matching_pennies.pregame", "pennies",
                   argmax_game({coin}, {coin}, q)});
  }
  {
    const FinSet place("Place", {"A", "B"});
    const FinSet u("U", {"0", "1", "2"});
    const FinFun q = payoff_table(place, place, u, {{"2", "2"}, {"0", "0"}, {"0", "0"}, {"1", "1"}});
    out.push_back({"coordination", "coordination.pregame", "meet",
                   argmax_game({place}, {place}, q)});
  }
  {
    // Entry deterrence: staying out pays (0, 2) whatever the incumbent
    // plans; entering meets a fight (-1, -1) or a shared market (1, 1).
    const FinSet entry("Entry", {"Out", "In"});
    const FinSet reply("Reply", {"Fight", "Share"});
    const FinSet u("U", {"-1", "0", "1", "2"});
    const FinFun q = payoff_table(entry, reply, u, {{"0", "2"}, {"0", "2"}, {"-1", "-1"}, {"1", "1"}});
    out.push_back({"two_stage_sequential", "two_stage_sequential.pregame", "entry",
                   max_game({entry}, {reply}, q)});
  }
  return out;
}

Pregame diagram(const ClassicInstance& instance, const Caps& caps) {
  if (const auto* s = std::get_if<SimultaneousGame>(&instance.spec)) {
    return simultaneous_diagram(*s, caps);
  }
  return sequential_diagram(std::get<SequentialGame>(instance.spec), caps);
}

}  // namespace pregame
