#pragma once

// The category of pregames over finite sets.
//
// An object is an Interface (X, S), written X ⊗ S*: covariant ports carry
// values forward, contravariant ports carry outcomes backward. A morphism
// (X, S) → (Y, R) is a Pregame: a finite set of strategy profiles Σ, a play
// function Σ × X → Y, a coplay function Σ × X × R → S and an individual
// rationality predicate on Σ × X × R^Y.
//
// Unit ports are erased (1 is the empty port list) and Σ is kept as a flat
// list of atomic components, so associators and unitors are identities and
// the two bracketings of a triple composite enumerate Σ identically.

#include <functional>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "pregame/finite.hpp"

namespace pregame {

struct Interface {
  PortList cov;
  PortList contra;

  friend bool operator==(const Interface&, const Interface&) = default;
};

Interface operator*(const Interface& a, const Interface& b);  // monoidal product

/// "X ⊗ S*", with multi-port lists as "X × Y" and "(R × R)*".
std::string render(const Interface& i);
std::string render_arrow(const Interface& dom, const Interface& cod);

/// A history together with a continuation Y → R.
struct Context {
  Index history;
  FinFun continuation;
};

using PlayFn = std::function<Index(Index sigma, Index x)>;
using CoplayFn = std::function<Index(Index sigma, Index x, Index r)>;
using RationalFn = std::function<bool(Index sigma, Index x, const FinFun& k)>;

/// Immutable handle; copies share the underlying behaviour.
class Pregame {
 public:
  Pregame(Interface domain, Interface codomain, PortList strategy, PlayFn play,
          CoplayFn coplay, RationalFn rational, std::string term);

  const Interface& domain() const { return d_->domain; }
  const Interface& codomain() const { return d_->codomain; }
  const PortList& strategy_components() const { return d_->strategy; }
  Index profile_count() const { return cardinality(d_->strategy); }

  Index play(Index sigma, Index x) const { return d_->play(sigma, x); }
  Index coplay(Index sigma, Index x, Index r) const { return d_->coplay(sigma, x, r); }
  bool rational(Index sigma, Index x, const FinFun& k) const {
    return d_->rational(sigma, x, k);
  }
  bool rational(Index sigma, const Context& c) const {
    return d_->rational(sigma, c.history, c.continuation);
  }

  /// Term describing how the pregame was built, for diagnostics.
  const std::string& term() const { return d_->term; }
  std::string signature() const { return render_arrow(domain(), codomain()); }

 private:
  struct Data {
    Interface domain;
    Interface codomain;
    PortList strategy;
    PlayFn play;
    CoplayFn coplay;
    RationalFn rational;
    std::string term;
  };
  std::shared_ptr<const Data> d_;
};

Pregame identity(const Interface& i);

/// Rationality of a decision: the strategy as a table X → Y, the history
/// and the continuation Y → R.
using DecisionRule =
    std::function<bool(const FinFun& strategy, Index x, const FinFun& k)>;

/// An agent observing X, choosing Y and reasoning about outcomes R. Σ is a
/// single component named `name` whose elements are all functions X → Y.
Pregame decision(const std::string& name, const PortList& observe,
                 const PortList& choose, const PortList& outcome, DecisionRule rule,
                 const Caps& caps = {});

/// Label of the strategy with the given rank in a decision's Σ component.
std::string strategy_label(const PortList& observe, const PortList& choose, Index rank);

Pregame computation(const FinFun& f, const std::string& name = "f");

/// f : A → B viewed backwards, ([], B) → ([], A); coplay(•, •, a) = f(a).
Pregame cocomputation(const FinFun& f, const std::string& name = "f");

/// τ_X : X ⊗ X* → 1, feeding the forward value back as an outcome.
Pregame teleological_unit(const PortList& ports);

/// h ∘ g. Σ is g's components followed by h's.
Pregame compose(const Pregame& h, const Pregame& g);

/// g ⊗ h. Σ is g's components followed by h's.
Pregame tensor(const Pregame& g, const Pregame& h);

/// Reorders ports. Codomain covariant port j is domain port cov_perm[j];
/// codomain contravariant port j is domain contravariant port contra_perm[j],
/// so coplay routes outcomes through the inverse permutation.
Pregame structural(const Interface& i, const std::vector<std::size_t>& cov_perm,
                   const std::vector<std::size_t>& contra_perm);

/// Symmetry on covariant ports: (A ++ B, []) → (B ++ A, []).
Pregame swap(const PortList& a, const PortList& b);

/// Symmetry on contravariant ports: ([], A ++ B) → ([], B ++ A).
Pregame coswap(const PortList& a, const PortList& b);

bool is_closed(const Pregame& g);

/// Profile ranks σ with σ E (•, k) where k is the unique map into 1.
std::vector<Index> equilibrium_ranks(const Pregame& g, const Caps& caps = {});
std::vector<TupleValue> equilibria(const Pregame& g, const Caps& caps = {});

/// Labels of each strategy component of a profile.
std::vector<std::string> profile_labels(const Pregame& g, Index sigma);

/// Exhaustive comparison of interfaces, strategy components, play, coplay
/// and rationality on every context. `component_perm[j]` names the
/// component of g matching component j of h; empty means the identity.
/// Returns a description of the first disagreement, or nullopt.
std::optional<std::string> first_difference(const Pregame& g, const Pregame& h,
                                            const std::vector<std::size_t>& component_perm = {},
                                            const Caps& caps = {});

bool extensionally_equal(const Pregame& g, const Pregame& h, const Caps& caps = {});
bool extensionally_equal(const Pregame& g, const Pregame& h,
                         const std::vector<std::size_t>& component_perm,
                         const Caps& caps = {});

/// Cost of an extensional comparison, |Σ|·|X|·max(|R^Y|, |R|), saturating.
Index extensional_cost(const Pregame& g);

}  // namespace pregame
