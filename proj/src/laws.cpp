#include "pregame/laws.hpp"

#include <algorithm>
#include <cctype>
#include <numeric>
#include <sstream>

namespace pregame {

namespace {

std::uint64_t mix(std::uint64_t h, std::uint64_t v) {
  h ^= v + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
  h ^= h >> 31;
  h *= 0xbf58476d1ce4e5b9ULL;
  return h ^ (h >> 29);
}

std::uint64_t mix_table(std::uint64_t h, const std::vector<Index>& table) {
  for (auto v : table) h = mix(h, v);
  return mix(h, table.size());
}

FinSet sized(const std::string& name, std::size_t n) {
  std::vector<std::string> elements;
  std::string prefix(1, static_cast<char>(std::tolower(static_cast<unsigned char>(name[0]))));
  for (std::size_t i = 0; i < n; ++i) elements.push_back(prefix + std::to_string(i));
  return FinSet(name + std::to_string(n), std::move(elements));
}

Index power(Index base, Index exp) {
  Index out = 1;
  for (Index i = 0; i < exp; ++i) {
    if (base != 0 && out > UINT64_MAX / base) return UINT64_MAX;
    out *= base;
  }
  return out;
}

std::vector<std::size_t> random_perm(Rng& rng, std::size_t n) {
  std::vector<std::size_t> perm(n);
  std::iota(perm.begin(), perm.end(), 0);
  for (std::size_t i = n; i > 1; --i) std::swap(perm[i - 1], perm[rng.below(i)]);
  return perm;
}

void record(LawOutcome& out, const Pregame& lhs, const Pregame& rhs,
            const std::optional<std::string>& diff) {
  ++out.total;
  if (!diff) {
    ++out.passed;
    return;
  }
  out.counterexamples.push_back(lhs.term() + " vs " + rhs.term() + ": " + *diff);
}

}  // namespace

PregameGenerator::PregameGenerator(std::uint64_t seed, Index budget)
    : rng_(seed), budget_(budget) {
  for (const char* name : {"A", "B"}) {
    for (std::size_t n = 1; n <= 3; ++n) pool_.push_back(sized(name, n));
  }
}

PortList PregameGenerator::ports(std::size_t max_ports) {
  PortList out;
  const auto n = rng_.below(max_ports + 1);
  for (Index i = 0; i < n; ++i) out.push_back(pool_[rng_.below(pool_.size())]);
  return out;
}

FinFun PregameGenerator::function(const PortList& dom, const PortList& cod) {
  const Index m = cardinality(cod);
  return FinFun::tabulate(dom, cod, [&](Index) { return rng_.below(m); });
}

Interface PregameGenerator::interface() {
  for (;;) {
    Interface i{ports(2), ports(2)};
    if (power(cardinality(i.contra), cardinality(i.cov)) <= 64) return i;
  }
}

Pregame PregameGenerator::leaf(const Interface& domain) {
  const Interface cod = interface();
  const std::string name = "L" + std::to_string(serial_++);
  PortList sigma;
  if (rng_.chance(2, 3)) sigma.push_back(sized("L", 1 + rng_.below(3)));
  const Index nx = cardinality(domain.cov);
  const Index nr = cardinality(cod.contra);
  const FinFun play = function(concat(sigma, domain.cov), cod.cov);
  const FinFun coplay = function(concat(sigma, concat(domain.cov, cod.contra)), domain.contra);
  const std::uint64_t salt = rng_.bits();
  return Pregame(
      domain, cod, sigma, [play, nx](Index s, Index x) { return play(s * nx + x); },
      [coplay, nx, nr](Index s, Index x, Index r) { return coplay((s * nx + x) * nr + r); },
      [salt](Index s, Index x, const FinFun& k) {
        return mix_table(mix(mix(salt, s), x), k.table()) % 4 != 0;
      },
      name);
}

Pregame PregameGenerator::atom(const Interface& domain) {
  switch (rng_.below(6)) {
    case 0: {
      const PortList y =
          rng_.chance(1, 4) ? PortList{} : PortList{pool_[rng_.below(pool_.size())]};
      const PortList r = rng_.chance(1, 2) ? y : ports(1);
      if (power(cardinality(y), cardinality(domain.cov)) > 27) break;
      const std::uint64_t salt = rng_.bits();
      Pregame d = decision("D" + std::to_string(serial_++), domain.cov, y, r,
                           [salt](const FinFun& strategy, Index x, const FinFun& k) {
                             return mix_table(mix_table(mix(salt, x), strategy.table()),
                                              k.table()) % 3 != 0;
                           });
      if (y == r && rng_.chance(1, 2)) d = compose(teleological_unit(y), d);
      if (domain.contra.empty()) return d;
      const PortList back = ports(1);
      return tensor(d, cocomputation(function(back, domain.contra), "g" + std::to_string(serial_++)));
    }
    case 1: {
      const PortList y = ports(2);
      const PortList r = ports(2);
      const std::string n = std::to_string(serial_++);
      const Pregame forward = computation(function(domain.cov, y), "f" + n);
      const Pregame backward = cocomputation(function(r, domain.contra), "g" + n);
      return tensor(forward, backward);
    }
    case 2:
      if (domain.cov == domain.contra && !domain.cov.empty()) return teleological_unit(domain.cov);
      break;
    case 3:
      return structural(domain, random_perm(rng_, domain.cov.size()),
                        random_perm(rng_, domain.contra.size()));
    case 4:
      return identity(domain);
    default:
      break;
  }
  return leaf(domain);
}

Pregame PregameGenerator::attempt(const Interface& domain, int depth) {
  if (depth <= 0 || rng_.chance(1, 3)) return atom(domain);
  if (rng_.chance(1, 2)) {
    const Pregame g = attempt(domain, depth - 1);
    return compose(attempt(g.codomain(), depth - 1), g);
  }
  const auto i = rng_.below(domain.cov.size() + 1);
  const auto j = rng_.below(domain.contra.size() + 1);
  const Interface left{PortList(domain.cov.begin(), domain.cov.begin() + i),
                       PortList(domain.contra.begin(), domain.contra.begin() + j)};
  const Interface right{PortList(domain.cov.begin() + i, domain.cov.end()),
                        PortList(domain.contra.begin() + j, domain.contra.end())};
  return tensor(attempt(left, depth - 1), attempt(right, depth - 1));
}

Pregame PregameGenerator::from(const Interface& domain, int depth) {
  for (int tries = 0; tries < 32; ++tries) {
    Pregame g = attempt(domain, depth);
    if (extensional_cost(g) <= budget_) return g;
  }
  return identity(domain);
}

Pregame PregameGenerator::any(int depth) {
  if (rng_.chance(1, 4)) {
    const PortList x = ports(1);
    return from(Interface{x, x}, depth);
  }
  return from(interface(), depth);
}

LawOutcome check_identity_laws(std::uint64_t seed, std::size_t count, const Caps& caps) {
  LawOutcome out;
  out.law = "identity (left and right)";
  PregameGenerator gen(seed);
  for (std::size_t n = 0; n < count; ++n) {
    const Pregame g = gen.any();
    const Pregame left = compose(identity(g.codomain()), g);
    const Pregame right = compose(g, identity(g.domain()));
    auto diff = first_difference(left, g, {}, caps);
    if (!diff) diff = first_difference(right, g, {}, caps);
    record(out, left, g, diff);
  }
  return out;
}

LawOutcome check_associativity(std::uint64_t seed, std::size_t count, const Caps& caps) {
  LawOutcome out;
  out.law = "associativity";
  PregameGenerator gen(seed);
  for (std::size_t n = 0; n < count; ++n) {
    for (;;) {
      const Pregame g = gen.any(2);
      const Pregame h = gen.from(g.codomain(), 2);
      const Pregame i = gen.from(h.codomain(), 2);
      const Pregame lhs = compose(compose(i, h), g);
      if (extensional_cost(lhs) > gen.budget()) continue;
      const Pregame rhs = compose(i, compose(h, g));
      record(out, lhs, rhs, first_difference(lhs, rhs, {}, caps));
      break;
    }
  }
  return out;
}

LawOutcome check_interchange(std::uint64_t seed, std::size_t count, const Caps& caps) {
  LawOutcome out;
  out.law = "interchange";
  PregameGenerator gen(seed);
  for (std::size_t n = 0; n < count; ++n) {
    for (;;) {
      const Pregame g = gen.any(1);
      const Pregame g2 = gen.from(g.codomain(), 1);
      const Pregame h = gen.any(1);
      const Pregame h2 = gen.from(h.codomain(), 1);
      const Pregame lhs = tensor(compose(g2, g), compose(h2, h));
      if (extensional_cost(lhs) > gen.budget()) continue;
      const Pregame rhs = compose(tensor(g2, h2), tensor(g, h));
      // lhs components: g, g', h, h'; rhs components: g, h, g', h'.
      const std::size_t a = g.strategy_components().size();
      const std::size_t b = g2.strategy_components().size();
      const std::size_t c = h.strategy_components().size();
      const std::size_t d = h2.strategy_components().size();
      std::vector<std::size_t> perm;
      for (std::size_t k = 0; k < a; ++k) perm.push_back(k);
      for (std::size_t k = 0; k < c; ++k) perm.push_back(a + b + k);
      for (std::size_t k = 0; k < b; ++k) perm.push_back(a + k);
      for (std::size_t k = 0; k < d; ++k) perm.push_back(a + b + c + k);
      record(out, lhs, rhs, first_difference(lhs, rhs, perm, caps));
      break;
    }
  }
  return out;
}

LawOutcome check_symmetry(std::size_t max_size, const Caps& caps) {
  LawOutcome out;
  out.law = "symmetry (self-inverse, naturality)";
  std::vector<FinSet> sources;
  std::vector<FinSet> targets;
  for (std::size_t n = 1; n <= max_size; ++n) {
    sources.push_back(sized("S", n));
    targets.push_back(sized("T", n));
  }
  for (const auto& a : sources) {
    for (const auto& b : targets) {
      const PortList pa{a};
      const PortList pb{b};
      const Pregame twice = compose(swap(pb, pa), swap(pa, pb));
      const Pregame id = identity(Interface{concat(pa, pb), {}});
      record(out, twice, id, first_difference(twice, id, {}, caps));
      const Pregame cotwice = compose(coswap(pb, pa), coswap(pa, pb));
      const Pregame coid = identity(Interface{{}, concat(pa, pb)});
      record(out, cotwice, coid, first_difference(cotwice, coid, {}, caps));
    }
  }
  for (const auto& a : sources) {
    for (const auto& b : targets) {
      for (const auto& f : enumerate_functions({a}, {b}, caps.functions)) {
        for (const auto& c : sources) {
          for (const auto& d : targets) {
            for (const auto& g : enumerate_functions({c}, {d}, caps.functions)) {
              const Pregame lhs =
                  compose(swap({b}, {d}), tensor(computation(f, "f"), computation(g, "g")));
              const Pregame rhs =
                  compose(tensor(computation(g, "g"), computation(f, "f")), swap({a}, {c}));
              record(out, lhs, rhs, first_difference(lhs, rhs, {}, caps));
              const Pregame colhs =
                  compose(coswap({a}, {c}), tensor(cocomputation(f, "f"), cocomputation(g, "g")));
              const Pregame corhs =
                  compose(tensor(cocomputation(g, "g"), cocomputation(f, "f")), coswap({b}, {d}));
              record(out, colhs, corhs, first_difference(colhs, corhs, {}, caps));
            }
          }
        }
      }
    }
  }
  return out;
}

LawOutcome check_teleological_naturality(
    const std::vector<std::pair<std::size_t, std::size_t>>& shapes, const Caps& caps) {
  LawOutcome out;
  out.law = "teleological naturality";
  for (const auto& [nx, ny] : shapes) {
    const PortList x{sized("X", nx)};
    const PortList y{sized("Y", ny)};
    for (const auto& f : enumerate_functions(x, y, caps.functions)) {
      const Pregame lhs =
          compose(teleological_unit(y), tensor(computation(f, "f"), identity(Interface{{}, y})));
      const Pregame rhs =
          compose(teleological_unit(x), tensor(identity(Interface{x, {}}), cocomputation(f, "f")));
      record(out, lhs, rhs, first_difference(lhs, rhs, {}, caps));
    }
  }
  return out;
}

std::vector<std::pair<std::size_t, std::size_t>> all_shapes(std::size_t n) {
  std::vector<std::pair<std::size_t, std::size_t>> out;
  for (std::size_t a = 1; a <= n; ++a) {
    for (std::size_t b = 1; b <= n; ++b) out.emplace_back(a, b);
  }
  return out;
}

std::vector<LawOutcome> run_law_suites(std::uint64_t seed, std::size_t iterations,
                                       const Caps& caps) {
  return {check_identity_laws(seed, iterations, caps),
          check_associativity(mix(seed, 1), iterations, caps),
          check_interchange(mix(seed, 2), iterations, caps), check_symmetry(2, caps),
          check_teleological_naturality(all_shapes(3), caps)};
}

std::string format_report(const std::vector<LawOutcome>& outcomes, std::uint64_t seed,
                          std::size_t iterations) {
  std::ostringstream out;
  out << "laws: seed " << seed << ", " << iterations << " iterations\n";
  bool all = true;
  for (const auto& o : outcomes) {
    out << o.law << ": " << o.passed << "/" << o.total << " passed\n";
    for (const auto& c : o.counterexamples) out << "  counterexample: " << c << "\n";
    all = all && o.ok();
  }
  out << (all ? "all laws hold\n" : "some laws FAILED\n");
  return out.str();
}

}  // namespace pregame
