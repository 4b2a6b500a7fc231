#pragma once

// Builders for the two-player game schemas expressible as string diagrams,
// and a few classic instances with exact payoffs.

#include <string>
#include <variant>
#include <vector>

#include "pregame/agents.hpp"
#include "pregame/core.hpp"

namespace pregame {

/// Simultaneous game with selection functions: players choose from X and Y,
/// q : X × Y → R, both players see R.
struct SimultaneousGame {
  PortList first;
  PortList second;
  SelectionFunction eps;
  SelectionFunction delta;
  FinFun outcome;
};

/// Sequential game with quantifiers: the second player observes the first
/// move before choosing.
struct SequentialGame {
  PortList first;
  PortList second;
  Quantifier phi;
  Quantifier psi;
  FinFun outcome;
};

/// τ_R ∘ (q ⊗ Δ_R*) ∘ (P1 ⊗ P2), with players named "P1" and "P2".
Pregame simultaneous_diagram(const SimultaneousGame& g, const Caps& caps = {});

/// τ_R ∘ (q ⊗ Δ_R*) ∘ (((id_X ⊗ P2) ∘ Δ_X) ⊗ id_R*) ∘ P1. Σ = X × Y^X.
Pregame sequential_diagram(const SequentialGame& g, const Caps& caps = {});

/// Both players maximize their own coordinate (0 and 1) of the outcome.
SimultaneousGame argmax_game(const PortList& first, const PortList& second,
                             const FinFun& outcome);
SequentialGame max_game(const PortList& first, const PortList& second, const FinFun& outcome);

/// The normal-form view of a two-player game with payoff coordinates.
UtilityTable utility_table(const PortList& first, const PortList& second,
                           const FinFun& outcome);

/// Two-player payoff table over single move sets, rows in move order.
FinFun payoff_table(const FinSet& first, const FinSet& second, const FinSet& payoffs,
                    const std::vector<std::pair<std::string, std::string>>& rows);

struct ClassicInstance {
  std::string name;
  std::string file;  // shipped .pregame file, relative to the corpus directory
  std::string game;  // game name inside that file
  std::variant<SimultaneousGame, SequentialGame> spec;
};

/// prisoners_dilemma, matching_pennies, coordination, two_stage_sequential.
std::vector<ClassicInstance> classic_instances();

Pregame diagram(const ClassicInstance& instance, const Caps& caps = {});

}  // namespace pregame
