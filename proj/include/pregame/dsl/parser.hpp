#pragma once

#include <string_view>
#include <vector>

#include "pregame/dsl/ast.hpp"
#include "pregame/dsl/lexer.hpp"

namespace pregame::dsl {

/// Recursive-descent parse of a token stream. `eof` is the span reported
/// when input ends early. Throws ParseError naming the expected tokens.
Program parse(const std::vector<Token>& tokens, Span eof = {});

/// tokenize + parse.
Program parse_source(std::string_view source);

}  // namespace pregame::dsl
