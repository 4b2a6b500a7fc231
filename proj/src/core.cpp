#include "pregame/core.hpp"

#include <limits>
#include <sstream>

namespace pregame {

namespace {

constexpr Index kSaturated = std::numeric_limits<Index>::max();

Index mul(Index a, Index b) {
  if (a == 0 || b == 0) return 0;
  if (a > kSaturated / b) return kSaturated;
  return a * b;
}

std::string starred(const PortList& ports) {
  if (ports.size() > 1) return "(" + render_ports(ports) + ")*";
  return render_ports(ports) + "*";
}

std::vector<std::size_t> inverse(const std::vector<std::size_t>& perm) {
  std::vector<std::size_t> inv(perm.size());
  for (std::size_t j = 0; j < perm.size(); ++j) inv[perm[j]] = j;
  return inv;
}

std::string join_ports(const PortList& ports) {
  std::string out;
  for (std::size_t i = 0; i < ports.size(); ++i) {
    if (i) out += ", ";
    out += ports[i].name();
  }
  return out;
}

std::string open_ports(const char* where, const char* variance, const PortList& ports) {
  return std::string(where) + " has " + variance + (ports.size() > 1 ? " ports " : " port ") +
         join_ports(ports);
}

const auto always = [](Index, Index, const FinFun&) { return true; };

}  // namespace

Interface operator*(const Interface& a, const Interface& b) {
  return Interface{concat(a.cov, b.cov), concat(a.contra, b.contra)};
}

std::string render(const Interface& i) {
  return render_ports(i.cov) + " ⊗ " + starred(i.contra);
}

std::string render_arrow(const Interface& dom, const Interface& cod) {
  return render(dom) + " → " + render(cod);
}

Pregame::Pregame(Interface domain, Interface codomain, PortList strategy, PlayFn play,
                 CoplayFn coplay, RationalFn rational, std::string term)
    : d_(std::make_shared<Data>(Data{std::move(domain), std::move(codomain),
                                     std::move(strategy), std::move(play), std::move(coplay),
                                     std::move(rational), std::move(term)})) {}

Pregame identity(const Interface& i) {
  return Pregame(
      i, i, {}, [](Index, Index x) { return x; }, [](Index, Index, Index r) { return r; },
      always, "id[" + render(i) + "]");
}

std::string strategy_label(const PortList& observe, const PortList& choose, Index rank) {
  const Index nx = cardinality(observe);
  const Index ny = cardinality(choose);
  if (observe.empty()) return tuple_label(choose, apply_ranked(nx, ny, rank, 0));
  std::string out = "{";
  for (Index x = 0; x < nx; ++x) {
    if (x) out += ", ";
    out += tuple_label(observe, x) + "->" + tuple_label(choose, apply_ranked(nx, ny, rank, x));
  }
  return out + "}";
}

Pregame decision(const std::string& name, const PortList& observe, const PortList& choose,
                 const PortList& outcome, DecisionRule rule, const Caps& caps) {
  const Index ny = cardinality(choose);
  if (ny == 0) {
    throw Error(ErrorKind::EmptyChoiceSet,
                "decision " + name + " chooses from the empty set " + render_ports(choose));
  }
  const Index nx = cardinality(observe);
  const Index count = function_count(observe, choose);
  if (count > caps.functions) {
    throw Error(ErrorKind::DomainTooLarge,
                "decision " + name + " has " +
                    (count == kSaturated ? std::string("more than 2^64") : std::to_string(count)) +
                    " strategies " + render_ports(observe) + " → " + render_ports(choose) +
                    " (cap " + std::to_string(caps.functions) + ")");
  }
  std::vector<std::string> elements;
  elements.reserve(count);
  for (Index s = 0; s < count; ++s) elements.push_back(strategy_label(observe, choose, s));

  auto play = [nx, ny](Index s, Index x) { return apply_ranked(nx, ny, s, x); };
  auto rational = [observe, choose, rule = std::move(rule)](Index s, Index x, const FinFun& k) {
    return rule(function_at(observe, choose, s), x, k);
  };
  return Pregame(Interface{observe, {}}, Interface{choose, outcome},
                 {FinSet(name, std::move(elements))}, play,
                 [](Index, Index, Index) { return Index{0}; }, rational, name);
}

Pregame computation(const FinFun& f, const std::string& name) {
  return Pregame(
      Interface{f.dom(), {}}, Interface{f.cod(), {}}, {},
      [f](Index, Index x) { return f(x); }, [](Index, Index, Index) { return Index{0}; },
      always, name);
}

Pregame cocomputation(const FinFun& f, const std::string& name) {
  return Pregame(
      Interface{{}, f.cod()}, Interface{{}, f.dom()}, {},
      [](Index, Index) { return Index{0}; }, [f](Index, Index, Index r) { return f(r); },
      always, name + "^*");
}

Pregame teleological_unit(const PortList& ports) {
  return Pregame(
      Interface{ports, ports}, Interface{}, {}, [](Index, Index) { return Index{0}; },
      [](Index, Index x, Index) { return x; }, always, "tau[" + render_ports(ports) + "]");
}

Pregame compose(const Pregame& h, const Pregame& g) {
  if (!(g.codomain() == h.domain())) {
    throw Error(ErrorKind::InterfaceMismatch,
                "cannot compose: codomain " + render(g.codomain()) +
                    " does not match domain " + render(h.domain()));
  }
  const Index nh = h.profile_count();
  auto play = [g, h, nh](Index s, Index x) {
    return h.play(second_of(s, nh), g.play(first_of(s, nh), x));
  };
  auto coplay = [g, h, nh](Index s, Index x, Index r) {
    const Index s1 = first_of(s, nh);
    const Index s2 = second_of(s, nh);
    return g.coplay(s1, x, h.coplay(s2, g.play(s1, x), r));
  };
  auto rational = [g, h, nh](Index s, Index x, const FinFun& k) {
    const Index s1 = first_of(s, nh);
    const Index s2 = second_of(s, nh);
    // Continuation seen by g: run h forward from y, close with k, and run
    // h's coplay back to g's outcome wire.
    const Interface& mid = g.codomain();
    const FinFun before = FinFun::tabulate(
        mid.cov, mid.contra, [&](Index y) { return h.coplay(s2, y, k(h.play(s2, y))); });
    return g.rational(s1, x, before) && h.rational(s2, g.play(s1, x), k);
  };
  return Pregame(g.domain(), h.codomain(),
                 concat(g.strategy_components(), h.strategy_components()), play, coplay,
                 rational, "(" + g.term() + " ; " + h.term() + ")");
}

Pregame tensor(const Pregame& g, const Pregame& h) {
  const Index nh = h.profile_count();
  const Index nx2 = cardinality(h.domain().cov);
  const Index ny2 = cardinality(h.codomain().cov);
  const Index nr2 = cardinality(h.codomain().contra);
  const Index ns2 = cardinality(h.domain().contra);

  auto play = [g, h, nh, nx2, ny2](Index s, Index x) {
    return pair_rank(g.play(first_of(s, nh), first_of(x, nx2)),
                     h.play(second_of(s, nh), second_of(x, nx2)), ny2);
  };
  auto coplay = [g, h, nh, nx2, nr2, ns2](Index s, Index x, Index r) {
    return pair_rank(g.coplay(first_of(s, nh), first_of(x, nx2), first_of(r, nr2)),
                     h.coplay(second_of(s, nh), second_of(x, nx2), second_of(r, nr2)), ns2);
  };
  auto rational = [g, h, nh, nx2, ny2, nr2](Index s, Index x, const FinFun& k) {
    const Index s1 = first_of(s, nh);
    const Index s2 = second_of(s, nh);
    const Index x1 = first_of(x, nx2);
    const Index x2 = second_of(x, nx2);
    // Each side sees k with the other side's move held fixed.
    const Index y2 = h.play(s2, x2);
    const FinFun k1 = FinFun::tabulate(g.codomain().cov, g.codomain().contra, [&](Index y1) {
      return first_of(k(pair_rank(y1, y2, ny2)), nr2);
    });
    if (!g.rational(s1, x1, k1)) return false;
    const Index y1 = g.play(s1, x1);
    const FinFun k2 = FinFun::tabulate(h.codomain().cov, h.codomain().contra, [&](Index y) {
      return second_of(k(pair_rank(y1, y, ny2)), nr2);
    });
    return h.rational(s2, x2, k2);
  };
  return Pregame(g.domain() * h.domain(), g.codomain() * h.codomain(),
                 concat(g.strategy_components(), h.strategy_components()), play, coplay,
                 rational, "(" + g.term() + " || " + h.term() + ")");
}

Pregame structural(const Interface& i, const std::vector<std::size_t>& cov_perm,
                   const std::vector<std::size_t>& contra_perm) {
  const FinFun forward = permutation_fun(i.cov, cov_perm);
  const FinFun contra = permutation_fun(i.contra, contra_perm);
  const FinFun backward = permutation_fun(contra.cod(), inverse(contra_perm));
  std::ostringstream term;
  term << "perm[" << render(i) << " :";
  for (auto p : cov_perm) term << ' ' << p;
  term << " /";
  for (auto p : contra_perm) term << ' ' << p;
  term << ']';
  return Pregame(
      i, Interface{forward.cod(), contra.cod()}, {},
      [forward](Index, Index x) { return forward(x); },
      [backward](Index, Index, Index r) { return backward(r); }, always, term.str());
}

namespace {

std::vector<std::size_t> block_swap(std::size_t a, std::size_t b) {
  std::vector<std::size_t> perm;
  for (std::size_t i = 0; i < b; ++i) perm.push_back(a + i);
  for (std::size_t i = 0; i < a; ++i) perm.push_back(i);
  return perm;
}

std::vector<std::size_t> iota(std::size_t n) {
  std::vector<std::size_t> v(n);
  for (std::size_t i = 0; i < n; ++i) v[i] = i;
  return v;
}

}  // namespace

Pregame swap(const PortList& a, const PortList& b) {
  return structural(Interface{concat(a, b), {}}, block_swap(a.size(), b.size()), {});
}

Pregame coswap(const PortList& a, const PortList& b) {
  // Codomain contravariant ports are B ++ A.
  return structural(Interface{{}, concat(a, b)}, {}, block_swap(a.size(), b.size()));
}

bool is_closed(const Pregame& g) {
  return g.domain().cov.empty() && g.codomain().contra.empty();
}

std::vector<Index> equilibrium_ranks(const Pregame& g, const Caps& caps) {
  if (!is_closed(g)) {
    std::string why;
    if (!g.domain().cov.empty()) why = open_ports("domain", "covariant", g.domain().cov);
    if (!g.codomain().contra.empty()) {
      if (!why.empty()) why += "; ";
      why += open_ports("codomain", "contravariant", g.codomain().contra);
    }
    throw Error(ErrorKind::NotClosed, "game is not closed: " + why);
  }
  const Index count = g.profile_count();
  if (count > caps.equilibria) {
    throw Error(ErrorKind::DomainTooLarge,
                "game has " + (count == kSaturated ? std::string("more than 2^64")
                                                   : std::to_string(count)) +
                    " strategy profiles (cap " + std::to_string(caps.equilibria) + ")");
  }
  const FinFun unique(g.codomain().cov, {},
                      std::vector<Index>(cardinality(g.codomain().cov), 0));
  std::vector<Index> out;
  for (Index s = 0; s < count; ++s) {
    if (g.rational(s, 0, unique)) out.push_back(s);
  }
  return out;
}

std::vector<TupleValue> equilibria(const Pregame& g, const Caps& caps) {
  std::vector<TupleValue> out;
  for (auto s : equilibrium_ranks(g, caps)) out.push_back(decode(g.strategy_components(), s));
  return out;
}

std::vector<std::string> profile_labels(const Pregame& g, Index sigma) {
  return labels(g.strategy_components(), sigma);
}

Index extensional_cost(const Pregame& g) {
  const Index ny = cardinality(g.codomain().cov);
  const Index nr = cardinality(g.codomain().contra);
  Index conts = 1;
  for (Index i = 0; i < ny; ++i) {
    conts = mul(conts, nr);
    if (conts == kSaturated || conts == 0) break;
  }
  if (ny == 0) conts = 1;
  return mul(mul(g.profile_count(), cardinality(g.domain().cov)), std::max(conts, nr));
}

std::optional<std::string> first_difference(const Pregame& g, const Pregame& h,
                                            const std::vector<std::size_t>& component_perm,
                                            const Caps& caps) {
  if (!(g.domain() == h.domain()) || !(g.codomain() == h.codomain())) {
    return "interfaces differ: " + g.signature() + " vs " + h.signature();
  }
  const auto& gc = g.strategy_components();
  const auto& hc = h.strategy_components();
  const auto perm = component_perm.empty() ? iota(hc.size()) : component_perm;
  if (gc.size() != hc.size() || perm.size() != hc.size()) {
    return "strategy components differ: " + render_ports(gc) + " vs " + render_ports(hc);
  }
  for (std::size_t j = 0; j < hc.size(); ++j) {
    if (perm[j] >= gc.size() || !(gc[perm[j]] == hc[j])) {
      return "strategy component " + std::to_string(j) + " differs: " + hc[j].name();
    }
  }
  const Index cost = extensional_cost(g);
  if (cost > caps.extensional) {
    throw Error(ErrorKind::DomainTooLarge,
                "extensional comparison needs " +
                    (cost == kSaturated ? std::string("more than 2^64") : std::to_string(cost)) +
                    " checks (cap " + std::to_string(caps.extensional) + ")");
  }

  const Interface& dom = g.domain();
  const Interface& cod = g.codomain();
  const Index ns = h.profile_count();
  const Index nx = cardinality(dom.cov);
  const Index nr = cardinality(cod.contra);
  const auto conts = enumerate_functions(cod.cov, cod.contra, caps.extensional);

  auto where = [&](Index sh, Index x) {
    std::string out = "σ = [";
    const auto ls = labels(hc, sh);
    for (std::size_t i = 0; i < ls.size(); ++i) out += (i ? ", " : "") + ls[i];
    return out + "], x = " + tuple_label(dom.cov, x);
  };

  for (Index sh = 0; sh < ns; ++sh) {
    const auto th = decode(hc, sh);
    TupleValue tg;
    tg.components.resize(gc.size());
    for (std::size_t j = 0; j < hc.size(); ++j) tg.components[perm[j]] = th.components[j];
    const Index sg = encode(gc, tg);
    for (Index x = 0; x < nx; ++x) {
      if (g.play(sg, x) != h.play(sh, x)) return "play differs at " + where(sh, x);
      for (Index r = 0; r < nr; ++r) {
        if (g.coplay(sg, x, r) != h.coplay(sh, x, r)) {
          return "coplay differs at " + where(sh, x) + ", r = " + tuple_label(cod.contra, r);
        }
      }
      for (const auto& k : conts) {
        if (g.rational(sg, x, k) != h.rational(sh, x, k)) {
          return "rationality differs at " + where(sh, x) + ", k = #" + std::to_string(k.rank());
        }
      }
    }
  }
  return std::nullopt;
}

bool extensionally_equal(const Pregame& g, const Pregame& h, const Caps& caps) {
  return !first_difference(g, h, {}, caps);
}

bool extensionally_equal(const Pregame& g, const Pregame& h,
                         const std::vector<std::size_t>& component_perm, const Caps& caps) {
  return !first_difference(g, h, component_perm, caps);
}

}  // namespace pregame
