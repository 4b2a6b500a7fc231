#pragma once

// Randomized and exhaustive checks of the categorical laws: identity,
// associativity, interchange, symmetry and naturality of τ.

#include <cstddef>
#include <cstdint>
#include <random>
#include <string>
#include <vector>

#include "pregame/core.hpp"

namespace pregame {

/// Deterministic across standard libraries (no std distributions).
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : engine_(seed) {}
  Index below(Index n) { return n == 0 ? 0 : engine_() % n; }
  bool chance(Index num, Index den) { return below(den) < num; }
  std::uint64_t bits() { return engine_(); }

 private:
  std::mt19937_64 engine_;
};

/// Random pregames over port sets of at most three elements. Leaves mix
/// decisions with hashed rationality, computations, cocomputations, τ,
/// identities, permutations and opaque random tables; every result stays
/// within `budget` for extensional_cost.
class PregameGenerator {
 public:
  explicit PregameGenerator(std::uint64_t seed, Index budget = 20000);

  Interface interface();
  Pregame any(int depth = 3);
  Pregame from(const Interface& domain, int depth = 3);

  Index budget() const { return budget_; }
  Rng& rng() { return rng_; }

 private:
  PortList ports(std::size_t max_ports);
  FinFun function(const PortList& dom, const PortList& cod);
  Pregame atom(const Interface& domain);
  Pregame leaf(const Interface& domain);
  Pregame attempt(const Interface& domain, int depth);

  Rng rng_;
  Index budget_;
  std::vector<FinSet> pool_;
  std::size_t serial_ = 0;
};

struct LawOutcome {
  std::string law;
  std::size_t passed = 0;
  std::size_t total = 0;
  std::vector<std::string> counterexamples;

  bool ok() const { return passed == total; }
};

/// compose(id, g) ≡ g and compose(g, id) ≡ g on `count` random pregames.
LawOutcome check_identity_laws(std::uint64_t seed, std::size_t count, const Caps& caps = {});

/// (i ∘ h) ∘ g ≡ i ∘ (h ∘ g) on `count` random composable triples.
LawOutcome check_associativity(std::uint64_t seed, std::size_t count, const Caps& caps = {});

/// (g' ∘ g) ⊗ (h' ∘ h) ≡ (g' ⊗ h') ∘ (g ⊗ h) on `count` random quadruples,
/// matching strategy components up to the reordering the two sides imply.
LawOutcome check_interchange(std::uint64_t seed, std::size_t count, const Caps& caps = {});

/// Swap is self-inverse and natural against every pair of (co)computations
/// between sets of at most `max_size` elements.
LawOutcome check_symmetry(std::size_t max_size = 2, const Caps& caps = {});

/// τ_Y ∘ (f ⊗ id_Y*) ≡ τ_X ∘ (id_X ⊗ f*) for every f : X → Y with
/// (|X|, |Y|) in `shapes`.
LawOutcome check_teleological_naturality(
    const std::vector<std::pair<std::size_t, std::size_t>>& shapes, const Caps& caps = {});

/// All shapes with 1 ≤ |X|, |Y| ≤ n.
std::vector<std::pair<std::size_t, std::size_t>> all_shapes(std::size_t n);

/// Every suite above with the given seed and iteration count.
std::vector<LawOutcome> run_law_suites(std::uint64_t seed, std::size_t iterations,
                                       const Caps& caps = {});

std::string format_report(const std::vector<LawOutcome>& outcomes, std::uint64_t seed,
                          std::size_t iterations);

}  // namespace pregame
