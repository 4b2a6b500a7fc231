#pragma once

#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "pregame/agents.hpp"
#include "pregame/core.hpp"
#include "pregame/dsl/ast.hpp"

namespace pregame::dsl {

struct PlayerInfo {
  std::string name;
  PortList observe;
  PortList choose;
  PortList feedback;
  RuleKind rule = RuleKind::Argmax;
  std::optional<SelectionFunction> selection;  // Argmax and Selection
  std::optional<Quantifier> quantifier;        // Quantifier
  Span span;
};

/// A game expression annotated with the interface of every node.
struct TypedExpr {
  enum class Kind {
    Player, Fun, CoFun, Game, Compose, Tensor, Tau,
    Copy, CoCopy, Delete, CoDelete, Id, Swap, CoSwap,
  };

  Kind kind = Kind::Id;
  std::string name;            // Player / Fun / CoFun / Game
  Span span;
  Interface domain;
  Interface codomain;
  std::vector<PortList> types; // builtin arguments
  std::vector<TypedExpr> children;
};

struct Environment {
  std::map<std::string, FinSet> sets;
  std::map<std::string, FinFun> funs;
  std::map<std::string, PlayerInfo> players;
  std::map<std::string, TypedExpr> games;
  std::vector<std::string> game_order;  // declaration order
};

/// Resolves declarations in order and annotates every game body. Throws
/// UnknownName, DuplicateDecl, InterfaceMismatch, TypeError or InvalidDecl
/// with the span of the offending syntax.
Environment typecheck(const Program& program);

/// Builds the pregame denoted by a checked expression. Core errors are
/// rethrown with the span of the leaf that raised them.
Pregame elaborate(const TypedExpr& expr, const Environment& env, const Caps& caps = {});

/// Elaborates the named game; UnknownName if there is none.
Pregame elaborate_game(const Environment& env, const std::string& name, const Caps& caps = {});

/// parse_source + typecheck.
Environment load(std::string_view source);

}  // namespace pregame::dsl
