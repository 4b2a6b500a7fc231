#pragma once

// Syntax tree of a `.pregame` file.
//
//   program := decl*
//   decl    := "set" ID "=" "{" elem ("," elem)* "}"
//            | "fun" ID ":" type "->" type "=" "{" (tuple "->" tuple ","?)+ "}"
//            | "player" ID ":" type "->" type "feedback" type rule
//            | "game" ID "=" expr
//   rule    := "argmax" ("[" NUMBER "]")?
//            | ("selection" | "quantifier") "{" (entry ","?)* "}"
//   entry   := "[" tuple ("," tuple)* "]" "->" "{" (tuple ("," tuple)*)? "}"
//   type    := ID ("*" ID)* | "1"
//   tuple   := elem | "(" (elem ("," elem)*)? ")"
//   elem    := ID | NUMBER
//   expr    := texpr (";" texpr)*
//   texpr   := atom ("||" atom)*
//   atom    := prim "^*"?
//   prim    := ID | "tau" "[" type "]" | "copy" "[" type "]" | "delete" "[" type "]"
//            | "id" "[" type ("," type)? "]" | "swap" "[" type "," type "]" | "(" expr ")"
//
// `g ; h` is diagrammatic composition (h after g); `;` binds looser than
// `||` and both associate to the left.

#include <cstddef>
#include <string>
#include <variant>
#include <vector>

#include "pregame/error.hpp"

namespace pregame::dsl {

struct Name {
  std::string text;
  Span span;
};

/// Product of declared set names; no names means the unit type `1`.
struct TypeExpr {
  std::vector<Name> names;
  Span span;
};

struct TupleLit {
  std::vector<Name> items;
  Span span;
};

struct SetDecl {
  Name name;
  std::vector<Name> elements;
  Span span;
};

struct FunEntry {
  TupleLit input;
  TupleLit output;
};

struct FunDecl {
  Name name;
  TypeExpr dom;
  TypeExpr cod;
  std::vector<FunEntry> entries;
  Span span;
};

enum class RuleKind { Argmax, Selection, Quantifier };

/// One row of a selection/quantifier table: the continuation listed as its
/// values in choice order, and the selected tuples.
struct RuleEntry {
  std::vector<TupleLit> continuation;
  std::vector<TupleLit> result;
  Span span;
};

struct PlayerDecl {
  Name name;
  TypeExpr observe;
  TypeExpr choose;
  TypeExpr feedback;
  RuleKind rule = RuleKind::Argmax;
  std::size_t coordinate = 0;
  bool explicit_coordinate = false;
  std::vector<RuleEntry> entries;
  Span rule_span;
  Span span;
};

enum class ExprKind { Ref, Compose, Tensor, Tau, Copy, Delete, Id, Swap };

struct Expr {
  ExprKind kind = ExprKind::Ref;
  Name name;                   // Ref
  std::vector<TypeExpr> types; // bracketed arguments of builtins
  bool dual = false;           // trailing ^*
  std::vector<Expr> children;  // Compose / Tensor: exactly two
  Span span;
};

struct GameDecl {
  Name name;
  Expr body;
  Span span;
};

using Decl = std::variant<SetDecl, FunDecl, PlayerDecl, GameDecl>;

struct Program {
  std::vector<Decl> decls;
};

/// Canonical source text; parsing it yields the same tree up to spans.
std::string print(const Program& program);
std::string print(const Expr& expr);
std::string print(const TypeExpr& type);

}  // namespace pregame::dsl
