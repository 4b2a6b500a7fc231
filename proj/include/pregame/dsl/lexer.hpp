#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "pregame/error.hpp"

namespace pregame::dsl {

enum class TokenKind { Keyword, Ident, Symbol, Number };

struct Token {
  TokenKind kind;
  std::string text;
  Span span;

  friend bool operator==(const Token&, const Token&) = default;
};

const char* to_string(TokenKind kind);

bool is_keyword(std::string_view word);

/// Splits `.pregame` source into tokens. Whitespace and `--` line comments
/// are skipped; the result carries no end-of-input marker. Throws LexError
/// on any other character.
std::vector<Token> tokenize(std::string_view source);

/// Span of the (empty) end of `source`, for errors at end of input.
Span end_span(std::string_view source);

}  // namespace pregame::dsl
