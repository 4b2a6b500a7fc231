#include "pregame/finite.hpp"

#include <algorithm>
#include <charconv>
#include <cstdlib>
#include <limits>
#include <numeric>
#include <set>

namespace pregame {

const char* to_string(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::DomainTooLarge: return "DomainTooLarge";
    case ErrorKind::InterfaceMismatch: return "InterfaceMismatch";
    case ErrorKind::EmptyChoiceSet: return "EmptyChoiceSet";
    case ErrorKind::NotClosed: return "NotClosed";
    case ErrorKind::LengthMismatch: return "LengthMismatch";
    case ErrorKind::NonNumericOutcome: return "NonNumericOutcome";
    case ErrorKind::InvalidValue: return "InvalidValue";
    case ErrorKind::LexError: return "LexError";
    case ErrorKind::ParseError: return "ParseError";
    case ErrorKind::UnknownName: return "UnknownName";
    case ErrorKind::DuplicateDecl: return "DuplicateDecl";
    case ErrorKind::InvalidDecl: return "InvalidDecl";
    case ErrorKind::TypeError: return "TypeError";
  }
  return "Error";
}

namespace {

constexpr Index kSaturated = std::numeric_limits<Index>::max();

Index saturating_mul(Index a, Index b) {
  if (a == 0 || b == 0) return 0;
  if (a > kSaturated / b) return kSaturated;
  return a * b;
}

Index saturating_pow(Index base, Index exp) {
  Index result = 1;
  for (Index i = 0; i < exp; ++i) {
    result = saturating_mul(result, base);
    if (result == kSaturated || result == 0) break;
  }
  return result;
}

void check_perm(std::size_t n, const std::vector<std::size_t>& perm) {
  if (perm.size() != n) {
    throw Error(ErrorKind::LengthMismatch,
                "permutation of length " + std::to_string(perm.size()) +
                    " applied to " + std::to_string(n) + " ports");
  }
  std::vector<bool> seen(n, false);
  for (auto p : perm) {
    if (p >= n || seen[p]) {
      throw Error(ErrorKind::LengthMismatch, "not a permutation of the ports");
    }
    seen[p] = true;
  }
}

}  // namespace

Caps Caps::from_env() {
  Caps caps;
  const char* raw = std::getenv("PREGAME_CAP");
  if (raw == nullptr || *raw == '\0') return caps;
  std::string_view text(raw);
  Index value = 0;
  auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
  if (ec != std::errc() || ptr != text.data() + text.size() || value == 0) {
    throw Error(ErrorKind::InvalidValue,
                "PREGAME_CAP must be a positive integer, got '" + std::string(text) + "'");
  }
  caps.functions = caps.equilibria = caps.extensional = value;
  return caps;
}

// ---------------------------------------------------------------- FinSet

FinSet::FinSet() : data_(std::make_shared<Data>()) {}

FinSet::FinSet(std::string name, std::vector<std::string> elements) {
  std::set<std::string_view> seen;
  for (const auto& e : elements) {
    if (!seen.insert(e).second) {
      throw Error(ErrorKind::InvalidValue,
                  "set " + name + " lists element '" + e + "' twice");
    }
  }
  data_ = std::make_shared<Data>(Data{std::move(name), std::move(elements)});
}

std::optional<Index> FinSet::find(std::string_view label) const {
  const auto& els = data_->elements;
  auto it = std::find(els.begin(), els.end(), label);
  if (it == els.end()) return std::nullopt;
  return static_cast<Index>(it - els.begin());
}

bool operator==(const FinSet& a, const FinSet& b) {
  if (a.data_ == b.data_) return true;
  return a.data_->name == b.data_->name && a.data_->elements == b.data_->elements;
}

// ---------------------------------------------------------------- tuples

PortList concat(const PortList& a, const PortList& b) {
  PortList out = a;
  out.insert(out.end(), b.begin(), b.end());
  return out;
}

Index cardinality(const PortList& ports) {
  Index n = 1;
  for (const auto& p : ports) n = saturating_mul(n, p.size());
  return n;
}

std::string render_ports(const PortList& ports) {
  if (ports.empty()) return "1";
  std::string out;
  for (std::size_t i = 0; i < ports.size(); ++i) {
    if (i) out += " × ";
    out += ports[i].name();
  }
  return out;
}

TupleValue decode(const PortList& ports, Index rank) {
  TupleValue v;
  v.components.resize(ports.size());
  for (std::size_t i = ports.size(); i-- > 0;) {
    const Index n = ports[i].size();
    v.components[i] = n == 0 ? 0 : rank % n;
    rank = n == 0 ? 0 : rank / n;
  }
  return v;
}

Index encode(const PortList& ports, const TupleValue& value) {
  if (value.components.size() != ports.size()) {
    throw Error(ErrorKind::LengthMismatch, "tuple arity does not match port list");
  }
  Index rank = 0;
  for (std::size_t i = 0; i < ports.size(); ++i) {
    if (value.components[i] >= ports[i].size()) {
      throw Error(ErrorKind::InvalidValue,
                  "component out of range for set " + ports[i].name());
    }
    rank = rank * ports[i].size() + value.components[i];
  }
  return rank;
}

std::vector<std::string> labels(const PortList& ports, Index rank) {
  const auto v = decode(ports, rank);
  std::vector<std::string> out;
  out.reserve(ports.size());
  for (std::size_t i = 0; i < ports.size(); ++i) out.push_back(ports[i].label(v.components[i]));
  return out;
}

std::string tuple_label(const PortList& ports, Index rank) {
  const auto ls = labels(ports, rank);
  if (ls.size() == 1) return ls.front();
  std::string out = "(";
  for (std::size_t i = 0; i < ls.size(); ++i) {
    if (i) out += ", ";
    out += ls[i];
  }
  return out + ")";
}

std::optional<Index> find_tuple(const PortList& ports,
                                const std::vector<std::string>& ls) {
  if (ls.size() != ports.size()) return std::nullopt;
  Index rank = 0;
  for (std::size_t i = 0; i < ports.size(); ++i) {
    auto c = ports[i].find(ls[i]);
    if (!c) return std::nullopt;
    rank = rank * ports[i].size() + *c;
  }
  return rank;
}

std::vector<TupleValue> enumerate_tuples(const PortList& ports) {
  const Index n = cardinality(ports);
  std::vector<TupleValue> out;
  out.reserve(n);
  for (Index r = 0; r < n; ++r) out.push_back(decode(ports, r));
  return out;
}

// ---------------------------------------------------------------- FinFun

FinFun::FinFun(PortList dom, PortList cod, std::vector<Index> table)
    : dom_(std::move(dom)), cod_(std::move(cod)), table_(std::move(table)) {
  const Index n = cardinality(dom_);
  if (n == kSaturated) throw Error(ErrorKind::DomainTooLarge, "function domain too large");
  if (table_.size() != n) {
    throw Error(ErrorKind::LengthMismatch,
                "function table has " + std::to_string(table_.size()) +
                    " entries, domain " + render_ports(dom_) + " has " + std::to_string(n));
  }
  const Index m = cardinality(cod_);
  for (auto y : table_) {
    if (y >= m) {
      throw Error(ErrorKind::InvalidValue,
                  "function value outside codomain " + render_ports(cod_));
    }
  }
}

TupleValue FinFun::operator()(const TupleValue& x) const {
  return decode(cod_, table_[encode(dom_, x)]);
}

Index FinFun::rank() const {
  const Index base = cardinality(cod_);
  Index r = 0;
  for (auto y : table_) {
    if (r > (kSaturated - y) / std::max<Index>(base, 1)) {
      throw Error(ErrorKind::DomainTooLarge, "function space too large to rank");
    }
    r = r * base + y;
  }
  return r;
}

Index function_count(const PortList& dom, const PortList& cod) {
  return saturating_pow(cardinality(cod), cardinality(dom));
}

FinFun function_at(const PortList& dom, const PortList& cod, Index rank) {
  const Index n = cardinality(dom);
  const Index c = cardinality(cod);
  std::vector<Index> table(n);
  for (Index i = n; i-- > 0;) {
    table[i] = c == 0 ? 0 : rank % c;
    rank = c == 0 ? 0 : rank / c;
  }
  return FinFun(dom, cod, std::move(table));
}

Index apply_ranked(Index dom_size, Index cod_size, Index rank, Index x) {
  for (Index i = x + 1; i < dom_size; ++i) rank /= cod_size;
  return rank % cod_size;
}

std::vector<FinFun> enumerate_functions(const PortList& dom, const PortList& cod, Index cap) {
  const Index count = function_count(dom, cod);
  if (count > cap) {
    throw Error(ErrorKind::DomainTooLarge,
                "enumerating " + render_ports(dom) + " → " + render_ports(cod) +
                    " needs " + (count == kSaturated ? std::string("more than 2^64")
                                                      : std::to_string(count)) +
                    " functions (cap " + std::to_string(cap) + ")");
  }
  std::vector<FinFun> out;
  out.reserve(count);
  for (Index r = 0; r < count; ++r) out.push_back(function_at(dom, cod, r));
  return out;
}

FinFun compose_fun(const FinFun& g, const FinFun& f) {
  if (!(f.cod() == g.dom())) {
    throw Error(ErrorKind::InterfaceMismatch,
                "cannot compose: " + render_ports(f.cod()) + " does not match " +
                    render_ports(g.dom()));
  }
  return FinFun::tabulate(f.dom(), g.cod(), [&](Index x) { return g(f(x)); });
}

FinFun identity_fun(const PortList& ports) {
  return FinFun::tabulate(ports, ports, [](Index x) { return x; });
}

FinFun copy_fun(const PortList& ports) {
  const Index n = cardinality(ports);
  return FinFun::tabulate(ports, concat(ports, ports),
                          [n](Index x) { return pair_rank(x, x, n); });
}

FinFun delete_fun(const PortList& ports) {
  return FinFun::tabulate(ports, {}, [](Index) { return Index{0}; });
}

FinFun permutation_fun(const PortList& ports, const std::vector<std::size_t>& perm) {
  check_perm(ports.size(), perm);
  PortList out;
  for (auto p : perm) out.push_back(ports[p]);
  return FinFun::tabulate(ports, out, [&](Index x) {
    const auto v = decode(ports, x);
    TupleValue w;
    for (auto p : perm) w.components.push_back(v.components[p]);
    return encode(out, w);
  });
}

FinFun swap_fun(const PortList& a, const PortList& b) {
  std::vector<std::size_t> perm;
  for (std::size_t i = 0; i < b.size(); ++i) perm.push_back(a.size() + i);
  for (std::size_t i = 0; i < a.size(); ++i) perm.push_back(i);
  return permutation_fun(concat(a, b), perm);
}

FinFun projection_fun(const PortList& ports, const std::vector<std::size_t>& keep) {
  PortList out;
  for (auto k : keep) {
    if (k >= ports.size()) throw Error(ErrorKind::LengthMismatch, "projection index out of range");
    out.push_back(ports[k]);
  }
  return FinFun::tabulate(ports, out, [&](Index x) {
    const auto v = decode(ports, x);
    TupleValue w;
    for (auto k : keep) w.components.push_back(v.components[k]);
    return encode(out, w);
  });
}

FinFun product_fun(const FinFun& f, const FinFun& g) {
  const Index n2 = cardinality(g.dom());
  const Index m2 = cardinality(g.cod());
  return FinFun::tabulate(concat(f.dom(), g.dom()), concat(f.cod(), g.cod()), [&](Index x) {
    return pair_rank(f(first_of(x, n2)), g(second_of(x, n2)), m2);
  });
}

StructuralFuns structural_funs(const PortList& ports) {
  StructuralFuns s{identity_fun(ports), copy_fun(ports), delete_fun(ports), {}, {}};
  for (std::size_t i = 0; i < ports.size(); ++i) s.projections.push_back(projection_fun(ports, {i}));
  std::vector<std::size_t> perm(ports.size());
  std::iota(perm.begin(), perm.end(), std::size_t{0});
  do {
    s.permutations.push_back(permutation_fun(ports, perm));
  } while (std::next_permutation(perm.begin(), perm.end()));
  return s;
}

}  // namespace pregame
