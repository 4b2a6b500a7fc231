#include "pregame/dsl/lexer.hpp"

#include <array>
#include <cctype>

namespace pregame::dsl {

namespace {

constexpr std::array kKeywords = {
    "set", "fun", "player", "feedback", "argmax", "selection", "quantifier",
    "game", "tau", "copy", "delete", "id", "swap",
};

bool ident_start(char c) { return std::isalpha(static_cast<unsigned char>(c)) || c == '_'; }
bool ident_char(char c) {
  return std::isalnum(static_cast<unsigned char>(c)) || c == '_' || c == '\'';
}
bool digit(char c) { return c >= '0' && c <= '9'; }

class Lexer {
 public:
  explicit Lexer(std::string_view src) : src_(src) {}

  std::vector<Token> run() {
    std::vector<Token> out;
    while (skip_trivia(), pos_ < src_.size()) out.push_back(next());
    return out;
  }

 private:
  char peek(std::size_t ahead = 0) const {
    return pos_ + ahead < src_.size() ? src_[pos_ + ahead] : '\0';
  }

  void advance(std::size_t n = 1) {
    for (std::size_t i = 0; i < n && pos_ < src_.size(); ++i) {
      if (src_[pos_] == '\n') {
        ++line_;
        column_ = 1;
      } else {
        ++column_;
      }
      ++pos_;
    }
  }

  void skip_trivia() {
    while (pos_ < src_.size()) {
      const char c = peek();
      if (c == ' ' || c == '\t' || c == '\r' || c == '\n') {
        advance();
      } else if (c == '-' && peek(1) == '-') {
        while (pos_ < src_.size() && peek() != '\n') advance();
      } else {
        return;
      }
    }
  }

  Token make(TokenKind kind, std::size_t len) {
    Span span{line_, column_, pos_, pos_ + len};
    Token t{kind, std::string(src_.substr(pos_, len)), span};
    advance(len);
    return t;
  }

  Token next() {
    const char c = peek();
    if (ident_start(c)) {
      std::size_t len = 1;
      while (ident_char(peek(len))) ++len;
      const auto word = src_.substr(pos_, len);
      return make(is_keyword(word) ? TokenKind::Keyword : TokenKind::Ident, len);
    }
    if (digit(c) || (c == '-' && digit(peek(1)))) {
      std::size_t len = c == '-' ? 1 : 0;
      while (digit(peek(len))) ++len;
      if ((peek(len) == '/' || peek(len) == '.') && digit(peek(len + 1))) {
        ++len;
        while (digit(peek(len))) ++len;
      }
      return make(TokenKind::Number, len);
    }
    if (c == '-' && peek(1) == '>') return make(TokenKind::Symbol, 2);
    if (c == '^' && peek(1) == '*') return make(TokenKind::Symbol, 2);
    if (c == '|' && peek(1) == '|') return make(TokenKind::Symbol, 2);
    switch (c) {
      case '=': case '{': case '}': case ',': case ':': case '*':
      case ';': case '(': case ')': case '[': case ']':
        return make(TokenKind::Symbol, 1);
      default:
        break;
    }
    // Report the whole UTF-8 sequence of a stray multibyte character.
    std::size_t len = 1;
    if (static_cast<unsigned char>(c) >= 0x80) {
      while (pos_ + len < src_.size() &&
             (static_cast<unsigned char>(src_[pos_ + len]) & 0xC0) == 0x80) {
        ++len;
      }
    }
    const Span span{line_, column_, pos_, pos_ + len};
    throw Error(ErrorKind::LexError,
                "unexpected character '" + std::string(src_.substr(pos_, len)) + "'", span);
  }

  std::string_view src_;
  std::size_t pos_ = 0;
  std::size_t line_ = 1;
  std::size_t column_ = 1;
};

}  // namespace

const char* to_string(TokenKind kind) {
  switch (kind) {
    case TokenKind::Keyword: return "keyword";
    case TokenKind::Ident: return "identifier";
    case TokenKind::Symbol: return "symbol";
    case TokenKind::Number: return "number";
  }
  return "token";
}

bool is_keyword(std::string_view word) {
  for (const char* k : kKeywords) {
    if (word == k) return true;
  }
  return false;
}

std::vector<Token> tokenize(std::string_view source) { return Lexer(source).run(); }

Span end_span(std::string_view source) {
  Span s{1, 1, source.size(), source.size()};
  for (char c : source) {
    if (c == '\n') {
      ++s.line;
      s.column = 1;
    } else {
      ++s.column;
    }
  }
  return s;
}

}  // namespace pregame::dsl
