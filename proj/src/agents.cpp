#include "pregame/agents.hpp"

#include <algorithm>
#include <charconv>

namespace pregame {

namespace {

std::vector<Index> normalized(std::vector<Index> v) {
  std::sort(v.begin(), v.end());
  v.erase(std::unique(v.begin(), v.end()), v.end());
  return v;
}

bool parse_int(std::string_view s, std::int64_t& out) {
  if (s.empty()) return false;
  auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), out);
  return ec == std::errc() && ptr == s.data() + s.size();
}

void check_continuation(const PortList& choices, const PortList& outcomes, const FinFun& k) {
  if (!(k.dom() == choices) || !(k.cod() == outcomes)) {
    throw Error(ErrorKind::InterfaceMismatch,
                "continuation " + render_ports(k.dom()) + " → " + render_ports(k.cod()) +
                    " does not match " + render_ports(choices) + " → " + render_ports(outcomes));
  }
}

/// Value of coordinate `c` of every outcome tuple.
std::vector<Rational> coordinate_values(const PortList& outcomes, std::size_t c) {
  if (c >= outcomes.size()) {
    throw Error(ErrorKind::NonNumericOutcome,
                "payoff coordinate " + std::to_string(c) + " out of range for " +
                    render_ports(outcomes));
  }
  const auto values = numeric_values(outcomes[c]);
  const Index n = cardinality(outcomes);
  std::vector<Rational> out(n);
  for (Index r = 0; r < n; ++r) out[r] = values[decode(outcomes, r).components[c]];
  return out;
}

std::vector<Index> maximizers(const FinFun& k, const std::vector<Rational>& value) {
  const Index n = k.table().size();
  std::vector<Index> best;
  for (Index y = 0; y < n; ++y) {
    if (best.empty() || value[k(y)] > value[k(best.front())]) {
      best.assign(1, y);
    } else if (value[k(y)] == value[k(best.front())]) {
      best.push_back(y);
    }
  }
  return best;
}

}  // namespace

Rational parse_rational(std::string_view text) {
  auto fail = [&]() -> Rational {
    throw Error(ErrorKind::NonNumericOutcome, "'" + std::string(text) + "' is not a number");
  };
  std::int64_t num = 0;
  std::int64_t den = 1;
  if (auto slash = text.find('/'); slash != std::string_view::npos) {
    if (!parse_int(text.substr(0, slash), num) || !parse_int(text.substr(slash + 1), den) ||
        den <= 0) {
      return fail();
    }
    return Rational(num, den);
  }
  if (auto dot = text.find('.'); dot != std::string_view::npos) {
    const bool negative = text.front() == '-';
    const auto body = negative ? text.substr(1) : text;
    const auto whole = body.substr(0, body.find('.'));
    const auto frac = body.substr(body.find('.') + 1);
    std::int64_t w = 0;
    std::int64_t f = 0;
    if (whole.empty() || whole.front() == '-' || frac.empty() || frac.front() == '-' ||
        frac.size() > 15 || !parse_int(whole, w) || !parse_int(frac, f)) {
      return fail();
    }
    for (std::size_t i = 0; i < frac.size(); ++i) den *= 10;
    const Rational r = Rational(w) + Rational(f, den);
    return negative ? -r : r;
  }
  if (!parse_int(text, num)) return fail();
  return Rational(num);
}

std::vector<Rational> numeric_values(const FinSet& set) {
  std::vector<Rational> out;
  out.reserve(set.size());
  for (const auto& e : set.elements()) {
    try {
      out.push_back(parse_rational(e));
    } catch (const Error&) {
      throw Error(ErrorKind::NonNumericOutcome,
                  "outcome set " + set.name() + " has non-numeric element '" + e + "'");
    }
  }
  return out;
}

// ------------------------------------------------------ selection functions

SelectionFunction::SelectionFunction(PortList choices, PortList outcomes, Fn select)
    : choices_(std::move(choices)), outcomes_(std::move(outcomes)), select_(std::move(select)) {}

SelectionFunction SelectionFunction::from_table(PortList choices, PortList outcomes,
                                                std::vector<std::vector<Index>> table) {
  const Index ny = cardinality(choices);
  for (auto& row : table) {
    row = normalized(std::move(row));
    if (!row.empty() && row.back() >= ny) {
      throw Error(ErrorKind::InvalidValue, "selection table names a choice outside " +
                                               render_ports(choices));
    }
  }
  return SelectionFunction(std::move(choices), std::move(outcomes),
                           [table = std::move(table)](const FinFun& k) {
                             const Index r = k.rank();
                             return r < table.size() ? table[r] : std::vector<Index>{};
                           });
}

std::vector<Index> SelectionFunction::operator()(const FinFun& k) const {
  check_continuation(choices_, outcomes_, k);
  return normalized(select_(k));
}

bool SelectionFunction::selects(const FinFun& k, Index y) const {
  const auto s = (*this)(k);
  return std::binary_search(s.begin(), s.end(), y);
}

Quantifier::Quantifier(PortList choices, PortList outcomes, Fn quantify)
    : choices_(std::move(choices)), outcomes_(std::move(outcomes)),
      quantify_(std::move(quantify)) {}

Quantifier Quantifier::from_table(PortList choices, PortList outcomes,
                                  std::vector<std::vector<Index>> table) {
  const Index nr = cardinality(outcomes);
  for (auto& row : table) {
    row = normalized(std::move(row));
    if (!row.empty() && row.back() >= nr) {
      throw Error(ErrorKind::InvalidValue, "quantifier table names an outcome outside " +
                                               render_ports(outcomes));
    }
  }
  return Quantifier(std::move(choices), std::move(outcomes),
                    [table = std::move(table)](const FinFun& k) {
                      const Index r = k.rank();
                      return r < table.size() ? table[r] : std::vector<Index>{};
                    });
}

std::vector<Index> Quantifier::operator()(const FinFun& k) const {
  check_continuation(choices_, outcomes_, k);
  return normalized(quantify_(k));
}

bool Quantifier::attains(const FinFun& k, Index r) const {
  const auto s = (*this)(k);
  return std::binary_search(s.begin(), s.end(), r);
}

SelectionFunction argmax_selection(const PortList& choices, const PortList& outcomes,
                                   std::size_t coordinate) {
  if (cardinality(choices) == 0) {
    throw Error(ErrorKind::EmptyChoiceSet, "argmax over the empty set " + render_ports(choices));
  }
  auto value = coordinate_values(outcomes, coordinate);
  return SelectionFunction(choices, outcomes, [value = std::move(value)](const FinFun& k) {
    return maximizers(k, value);
  });
}

Quantifier max_quantifier(const PortList& choices, const PortList& outcomes,
                          std::size_t coordinate) {
  if (cardinality(choices) == 0) {
    throw Error(ErrorKind::EmptyChoiceSet, "max over the empty set " + render_ports(choices));
  }
  auto value = coordinate_values(outcomes, coordinate);
  return Quantifier(choices, outcomes, [value = std::move(value)](const FinFun& k) {
    std::vector<Index> out;
    for (auto y : maximizers(k, value)) out.push_back(k(y));
    return out;
  });
}

Pregame decision_from_selection(const std::string& name, const PortList& observe,
                                const PortList& choose, const PortList& outcome,
                                const SelectionFunction& sel, const Caps& caps) {
  if (!(sel.choices() == choose) || !(sel.outcomes() == outcome)) {
    throw Error(ErrorKind::InterfaceMismatch,
                "selection function for " + name + " does not match " +
                    render_ports(choose) + " → " + render_ports(outcome));
  }
  return decision(
      name, observe, choose, outcome,
      [sel](const FinFun& strategy, Index x, const FinFun& k) {
        return sel.selects(k, strategy(x));
      },
      caps);
}

Pregame decision_from_quantifier(const std::string& name, const PortList& observe,
                                 const PortList& choose, const PortList& outcome,
                                 const Quantifier& qf, const Caps& caps) {
  if (!(qf.choices() == choose) || !(qf.outcomes() == outcome)) {
    throw Error(ErrorKind::InterfaceMismatch,
                "quantifier for " + name + " does not match " + render_ports(choose) +
                    " → " + render_ports(outcome));
  }
  return decision(
      name, observe, choose, outcome,
      [qf](const FinFun& strategy, Index x, const FinFun& k) {
        return qf.attains(k, k(strategy(x)));
      },
      caps);
}

// ------------------------------------------------------------------ oracles

std::vector<std::vector<Index>> nash_oracle(const UtilityTable& u) {
  const std::size_t players = u.moves.size();
  std::vector<Index> sizes;
  PortList joint;
  for (const auto& m : u.moves) {
    sizes.push_back(cardinality(m));
    joint = concat(joint, m);
  }
  if (!(u.payoff.dom() == joint) || u.payoff.cod().size() != players) {
    throw Error(ErrorKind::InterfaceMismatch, "payoff table does not match the players' moves");
  }
  std::vector<std::vector<Rational>> value;
  for (const auto& port : u.payoff.cod()) value.push_back(numeric_values(port));

  // Mixed-radix rank of a joint profile and the payoff of player i there.
  auto joint_rank = [&](const std::vector<Index>& p) {
    Index r = 0;
    for (std::size_t i = 0; i < players; ++i) r = r * sizes[i] + p[i];
    return r;
  };
  auto payoff = [&](const std::vector<Index>& p, std::size_t i) {
    const auto out = decode(u.payoff.cod(), u.payoff(joint_rank(p)));
    return value[i][out.components[i]];
  };

  std::vector<std::vector<Index>> result;
  std::vector<Index> profile(players, 0);
  Index total = 1;
  for (auto s : sizes) total *= s;
  for (Index n = 0; n < total; ++n) {
    Index rest = n;
    for (std::size_t i = players; i-- > 0;) {
      profile[i] = rest % sizes[i];
      rest /= sizes[i];
    }
    bool stable = true;
    for (std::size_t i = 0; i < players && stable; ++i) {
      const Rational current = payoff(profile, i);
      auto deviated = profile;
      for (Index m = 0; m < sizes[i] && stable; ++m) {
        deviated[i] = m;
        if (payoff(deviated, i) > current) stable = false;
      }
    }
    if (stable) result.push_back(profile);
  }
  return result;
}

std::vector<std::pair<Index, Index>> selection_equilibria(const PortList& first,
                                                          const PortList& second,
                                                          const SelectionFunction& eps,
                                                          const SelectionFunction& delta,
                                                          const FinFun& outcome) {
  const Index nx = cardinality(first);
  const Index ny = cardinality(second);
  const PortList& r = outcome.cod();
  std::vector<std::pair<Index, Index>> out;
  for (Index s1 = 0; s1 < nx; ++s1) {
    for (Index s2 = 0; s2 < ny; ++s2) {
      const FinFun k1 = FinFun::tabulate(first, r, [&](Index x) { return outcome(x * ny + s2); });
      const FinFun k2 = FinFun::tabulate(second, r, [&](Index y) { return outcome(s1 * ny + y); });
      if (eps.selects(k1, s1) && delta.selects(k2, s2)) out.emplace_back(s1, s2);
    }
  }
  return out;
}

std::vector<SequentialProfile> optimal_profiles(const PortList& first, const PortList& second,
                                                const Quantifier& phi, const Quantifier& psi,
                                                const FinFun& outcome, const Caps& caps) {
  const Index nx = cardinality(first);
  const Index ny = cardinality(second);
  const Index replies = function_count(first, second);
  if (replies > caps.functions || replies > caps.functions / std::max<Index>(nx, 1)) {
    throw Error(ErrorKind::DomainTooLarge,
                "sequential game has too many contingent strategies (cap " +
                    std::to_string(caps.functions) + ")");
  }
  const PortList& r = outcome.cod();
  auto q = [&](Index x, Index y) { return outcome(x * ny + y); };

  // Second condition depends only on the reply; the subgame after each x
  // is the same for every reply, so precompute ψ's verdict per (x, y).
  std::vector<std::vector<bool>> second_ok(nx, std::vector<bool>(ny));
  for (Index x = 0; x < nx; ++x) {
    const FinFun kx = FinFun::tabulate(second, r, [&](Index y) { return q(x, y); });
    const auto good = psi(kx);
    for (Index y = 0; y < ny; ++y) {
      second_ok[x][y] = std::binary_search(good.begin(), good.end(), q(x, y));
    }
  }

  std::vector<SequentialProfile> out;
  for (Index move = 0; move < nx; ++move) {
    for (Index reply = 0; reply < replies; ++reply) {
      auto answer = [&](Index x) { return apply_ranked(nx, ny, reply, x); };
      bool ok = true;
      for (Index x = 0; x < nx && ok; ++x) ok = second_ok[x][answer(x)];
      if (!ok) continue;
      const FinFun k = FinFun::tabulate(first, r, [&](Index x) { return q(x, answer(x)); });
      if (phi.attains(k, q(move, answer(move)))) out.push_back({move, reply});
    }
  }
  return out;
}

}  // namespace pregame
