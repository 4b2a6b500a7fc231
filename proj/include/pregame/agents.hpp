#pragma once

// Rationality relations for decisions, built from multivalued selection
// functions and quantifiers, plus brute-force oracles that compute the same
// equilibrium notions directly from payoff tables without going through
// pregame composition.

#include <boost/rational.hpp>

#include <cstdint>
#include <functional>
#include <string>
#include <string_view>
#include <vector>

#include "pregame/core.hpp"
#include "pregame/finite.hpp"

namespace pregame {

using Rational = boost::rational<std::int64_t>;

/// Parses "3", "-2", "7/4" or "0.25". Throws NonNumericOutcome otherwise.
Rational parse_rational(std::string_view text);

/// Numeric value of every element of a single port set.
std::vector<Rational> numeric_values(const FinSet& set);

/// ε : (Y → R) → P(Y). Results are sorted, duplicate-free choice ranks.
class SelectionFunction {
 public:
  using Fn = std::function<std::vector<Index>(const FinFun& k)>;

  SelectionFunction(PortList choices, PortList outcomes, Fn select);

  /// Table indexed by continuation rank; missing ranks select nothing.
  static SelectionFunction from_table(PortList choices, PortList outcomes,
                                      std::vector<std::vector<Index>> table);

  const PortList& choices() const { return choices_; }
  const PortList& outcomes() const { return outcomes_; }

  std::vector<Index> operator()(const FinFun& k) const;
  bool selects(const FinFun& k, Index y) const;

 private:
  PortList choices_;
  PortList outcomes_;
  Fn select_;
};

/// φ : (Y → R) → P(R). Results are sorted, duplicate-free outcome ranks.
class Quantifier {
 public:
  using Fn = std::function<std::vector<Index>(const FinFun& k)>;

  Quantifier(PortList choices, PortList outcomes, Fn quantify);

  static Quantifier from_table(PortList choices, PortList outcomes,
                               std::vector<std::vector<Index>> table);

  const PortList& choices() const { return choices_; }
  const PortList& outcomes() const { return outcomes_; }

  std::vector<Index> operator()(const FinFun& k) const;
  bool attains(const FinFun& k, Index r) const;

 private:
  PortList choices_;
  PortList outcomes_;
  Fn quantify_;
};

/// All choices maximizing the numeric outcome port `coordinate`; ties are
/// all kept.
SelectionFunction argmax_selection(const PortList& choices, const PortList& outcomes,
                                   std::size_t coordinate = 0);

/// { k(y) : y maximizes outcome port `coordinate` }.
Quantifier max_quantifier(const PortList& choices, const PortList& outcomes,
                          std::size_t coordinate = 0);

/// σ E (x, k) iff σ(x) ∈ sel(k).
Pregame decision_from_selection(const std::string& name, const PortList& observe,
                                const PortList& choose, const PortList& outcome,
                                const SelectionFunction& sel, const Caps& caps = {});

/// σ E (x, k) iff k(σ(x)) ∈ qf(k).
Pregame decision_from_quantifier(const std::string& name, const PortList& observe,
                                 const PortList& choose, const PortList& outcome,
                                 const Quantifier& qf, const Caps& caps = {});

/// Normal-form game: each player picks a tuple from its move ports; payoff
/// maps the joint move (concatenated) to one numeric port per player.
struct UtilityTable {
  std::vector<PortList> moves;
  FinFun payoff;
};

/// Pure profiles (one move rank per player) where no player strictly gains
/// by a unilateral deviation, in lexicographic order.
std::vector<std::vector<Index>> nash_oracle(const UtilityTable& u);

/// Direct selection equilibria of a two-player simultaneous game:
/// σ1 ∈ ε(λx. q(x, σ2)) and σ2 ∈ δ(λy. q(σ1, y)). Pairs (σ1, σ2).
std::vector<std::pair<Index, Index>> selection_equilibria(const PortList& first,
                                                          const PortList& second,
                                                          const SelectionFunction& eps,
                                                          const SelectionFunction& delta,
                                                          const FinFun& outcome);

/// A first move and a contingent reply X → Y (as a function rank).
struct SequentialProfile {
  Index move;
  Index reply;

  friend bool operator==(const SequentialProfile&, const SequentialProfile&) = default;
  friend auto operator<=>(const SequentialProfile&, const SequentialProfile&) = default;
};

/// Profiles with q(σ1, σ2 σ1) ∈ φ(λx. q(x, σ2 x)) and, for every x,
/// q(x, σ2 x) ∈ ψ(λy. q(x, y)). Enumerates X × Y^X in that order.
std::vector<SequentialProfile> optimal_profiles(const PortList& first, const PortList& second,
                                                const Quantifier& phi, const Quantifier& psi,
                                                const FinFun& outcome, const Caps& caps = {});

}  // namespace pregame
