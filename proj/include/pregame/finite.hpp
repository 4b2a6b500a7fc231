#pragma once

// Finite sets, tuples over port lists and total function tables.
//
// A port list [P0, P1, ..., Pn-1] denotes the product P0 x ... x Pn-1; the
// empty list is the unit set 1 with the single value "•". Tuples are
// addressed by their mixed-radix rank with the first port most
// significant, which is exactly the lexicographic enumeration order. A
// function table is indexed by domain rank and stores codomain ranks.

#include <cstddef>
#include <cstdint>
#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "pregame/error.hpp"

namespace pregame {

using Index = std::uint64_t;

/// Enumeration limits. Exceeding one raises ErrorKind::DomainTooLarge.
struct Caps {
  Index functions = 1'000'000;    // |cod|^|dom| for enumerate_functions / decisions
  Index equilibria = 100'000;     // |Σ| for equilibrium enumeration
  Index extensional = 1'000'000;  // |Σ|·|X|·|R^Y| for extensional equality

  /// Defaults, with every cap replaced by $PREGAME_CAP when it is set.
  static Caps from_env();
};

class FinSet {
 public:
  FinSet();
  FinSet(std::string name, std::vector<std::string> elements);

  const std::string& name() const { return data_->name; }
  const std::vector<std::string>& elements() const { return data_->elements; }
  std::size_t size() const { return data_->elements.size(); }
  bool empty() const { return data_->elements.empty(); }
  const std::string& label(Index i) const { return data_->elements.at(i); }
  std::optional<Index> find(std::string_view label) const;

  friend bool operator==(const FinSet& a, const FinSet& b);

 private:
  struct Data {
    std::string name;
    std::vector<std::string> elements;
  };
  std::shared_ptr<const Data> data_;
};

using PortList = std::vector<FinSet>;

PortList concat(const PortList& a, const PortList& b);

/// Number of tuples in the product; saturates at UINT64_MAX.
Index cardinality(const PortList& ports);

/// "1" for the empty list, otherwise set names joined by " × ".
std::string render_ports(const PortList& ports);

struct TupleValue {
  std::vector<Index> components;

  friend bool operator==(const TupleValue&, const TupleValue&) = default;
  friend auto operator<=>(const TupleValue&, const TupleValue&) = default;
};

TupleValue decode(const PortList& ports, Index rank);
Index encode(const PortList& ports, const TupleValue& value);

/// Element labels of a tuple, one per port.
std::vector<std::string> labels(const PortList& ports, Index rank);

/// "a" for one port, "(a, b)" for several, "()" for the unit value.
std::string tuple_label(const PortList& ports, Index rank);

/// Tuple rank from labels; nullopt when a label is not an element or the
/// arity is wrong.
std::optional<Index> find_tuple(const PortList& ports,
                                const std::vector<std::string>& labels);

std::vector<TupleValue> enumerate_tuples(const PortList& ports);

// Mixed-radix helpers for splitting a rank over a concatenated port list.
inline Index pair_rank(Index first, Index second, Index second_size) {
  return first * second_size + second;
}
inline Index first_of(Index rank, Index second_size) {
  return second_size == 0 ? 0 : rank / second_size;
}
inline Index second_of(Index rank, Index second_size) {
  return second_size == 0 ? 0 : rank % second_size;
}

class FinFun {
 public:
  FinFun(PortList dom, PortList cod, std::vector<Index> table);

  template <typename F>
  static FinFun tabulate(PortList dom, PortList cod, F&& f) {
    const Index n = cardinality(dom);
    std::vector<Index> table;
    table.reserve(n);
    for (Index x = 0; x < n; ++x) table.push_back(static_cast<Index>(f(x)));
    return FinFun(std::move(dom), std::move(cod), std::move(table));
  }

  Index operator()(Index x) const { return table_[x]; }
  TupleValue operator()(const TupleValue& x) const;

  const PortList& dom() const { return dom_; }
  const PortList& cod() const { return cod_; }
  const std::vector<Index>& table() const { return table_; }

  /// Position of this table in enumerate_functions(dom, cod).
  Index rank() const;

  friend bool operator==(const FinFun&, const FinFun&) = default;

 private:
  PortList dom_;
  PortList cod_;
  std::vector<Index> table_;
};

/// |cod|^|dom|, saturating.
Index function_count(const PortList& dom, const PortList& cod);

/// The function at position `rank` of enumerate_functions(dom, cod).
FinFun function_at(const PortList& dom, const PortList& cod, Index rank);

/// Value at domain rank `x` of the function with the given rank, without
/// materializing the table.
Index apply_ranked(Index dom_size, Index cod_size, Index rank, Index x);

/// All total functions in lexicographic order of their tables (the image of
/// the first domain tuple is the most significant digit).
std::vector<FinFun> enumerate_functions(const PortList& dom,
                                        const PortList& cod,
                                        Index cap = Caps{}.functions);

FinFun compose_fun(const FinFun& g, const FinFun& f);

FinFun identity_fun(const PortList& ports);
FinFun copy_fun(const PortList& ports);
FinFun delete_fun(const PortList& ports);

/// Output port j is input port perm[j].
FinFun permutation_fun(const PortList& ports, const std::vector<std::size_t>& perm);

/// A × B → B × A.
FinFun swap_fun(const PortList& a, const PortList& b);

/// Projection onto the listed ports, in the listed order.
FinFun projection_fun(const PortList& ports, const std::vector<std::size_t>& keep);

/// Cartesian product f × g.
FinFun product_fun(const FinFun& f, const FinFun& g);

struct StructuralFuns {
  FinFun identity;
  FinFun copy;
  FinFun erase;
  std::vector<FinFun> projections;   // one per port
  std::vector<FinFun> permutations;  // every port permutation, lexicographic
};

StructuralFuns structural_funs(const PortList& ports);

}  // namespace pregame
