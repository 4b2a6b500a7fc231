#include "pregame/dsl/parser.hpp"

#include <charconv>
#include <initializer_list>

namespace pregame::dsl {

namespace {

Span cover(const Span& a, const Span& b) { return Span{a.line, a.column, a.begin, b.end}; }

class Parser {
 public:
  Parser(const std::vector<Token>& tokens, Span eof) : toks_(tokens), eof_(eof) {}

  Program program() {
    Program p;
    while (!at_end()) p.decls.push_back(decl());
    return p;
  }

 private:
  bool at_end() const { return pos_ >= toks_.size(); }
  const Token* peek() const { return at_end() ? nullptr : &toks_[pos_]; }
  const Span& span() const { return at_end() ? eof_ : toks_[pos_].span; }
  const Span& last_span() const { return pos_ == 0 ? eof_ : toks_[pos_ - 1].span; }

  bool check(std::string_view text) const {
    const Token* t = peek();
    return t && (t->kind == TokenKind::Symbol || t->kind == TokenKind::Keyword) &&
           t->text == text;
  }
  bool check(TokenKind kind) const { return peek() && peek()->kind == kind; }

  [[noreturn]] void fail(std::initializer_list<std::string_view> expected) const {
    std::string msg = "expected ";
    if (expected.size() > 1) msg += "one of ";
    std::size_t i = 0;
    for (auto e : expected) {
      if (i++) msg += ", ";
      msg += e;
    }
    if (at_end()) {
      msg += " but reached end of input";
    } else {
      msg += " but found '" + peek()->text + "'";
    }
    throw Error(ErrorKind::ParseError, msg, span());
  }

  Token expect(std::string_view text) {
    if (!check(text)) fail({"'" + std::string(text) + "'"});
    return toks_[pos_++];
  }

  bool accept(std::string_view text) {
    if (!check(text)) return false;
    ++pos_;
    return true;
  }

  Name ident(std::string_view what) {
    if (!check(TokenKind::Ident)) fail({what});
    const Token& t = toks_[pos_++];
    return Name{t.text, t.span};
  }

  Name element() {
    if (!check(TokenKind::Ident) && !check(TokenKind::Number)) fail({"element name", "number"});
    const Token& t = toks_[pos_++];
    return Name{t.text, t.span};
  }

  Decl decl() {
    if (check("set")) return set_decl();
    if (check("fun")) return fun_decl();
    if (check("player")) return player_decl();
    if (check("game")) return game_decl();
    fail({"'set'", "'fun'", "'player'", "'game'"});
  }

  SetDecl set_decl() {
    SetDecl d;
    const Span start = expect("set").span;
    d.name = ident("set name");
    expect("=");
    expect("{");
    d.elements.push_back(element());
    while (accept(",")) d.elements.push_back(element());
    expect("}");
    d.span = cover(start, last_span());
    return d;
  }

  TypeExpr type() {
    TypeExpr t;
    t.span = span();
    if (check(TokenKind::Number) && peek()->text == "1") {
      ++pos_;
      return t;
    }
    if (!check(TokenKind::Ident)) fail({"set name", "'1'"});
    t.names.push_back(ident("set name"));
    while (accept("*")) t.names.push_back(ident("set name"));
    t.span = cover(t.span, last_span());
    return t;
  }

  TupleLit tuple() {
    TupleLit t;
    t.span = span();
    if (accept("(")) {
      if (!check(")")) {
        t.items.push_back(element());
        while (accept(",")) t.items.push_back(element());
      }
      expect(")");
    } else {
      t.items.push_back(element());
    }
    t.span = cover(t.span, last_span());
    return t;
  }

  FunDecl fun_decl() {
    FunDecl d;
    const Span start = expect("fun").span;
    d.name = ident("function name");
    expect(":");
    d.dom = type();
    expect("->");
    d.cod = type();
    expect("=");
    expect("{");
    do {
      FunEntry e;
      e.input = tuple();
      expect("->");
      e.output = tuple();
      d.entries.push_back(std::move(e));
      accept(",");
    } while (!check("}"));
    expect("}");
    d.span = cover(start, last_span());
    return d;
  }

  RuleEntry rule_entry() {
    RuleEntry e;
    e.span = expect("[").span;
    e.continuation.push_back(tuple());
    while (accept(",")) e.continuation.push_back(tuple());
    expect("]");
    expect("->");
    expect("{");
    if (!check("}")) {
      e.result.push_back(tuple());
      while (accept(",")) e.result.push_back(tuple());
    }
    expect("}");
    e.span = cover(e.span, last_span());
    return e;
  }

  PlayerDecl player_decl() {
    PlayerDecl d;
    const Span start = expect("player").span;
    d.name = ident("player name");
    expect(":");
    d.observe = type();
    expect("->");
    d.choose = type();
    expect("feedback");
    d.feedback = type();
    d.rule_span = span();
    if (accept("argmax")) {
      d.rule = RuleKind::Argmax;
      if (accept("[")) {
        if (!check(TokenKind::Number)) fail({"payoff coordinate"});
        const Token& t = toks_[pos_];
        std::size_t value = 0;
        auto [ptr, ec] = std::from_chars(t.text.data(), t.text.data() + t.text.size(), value);
        if (ec != std::errc() || ptr != t.text.data() + t.text.size()) {
          throw Error(ErrorKind::ParseError, "payoff coordinate must be a natural number",
                      t.span);
        }
        ++pos_;
        d.coordinate = value;
        d.explicit_coordinate = true;
        expect("]");
      }
    } else if (check("selection") || check("quantifier")) {
      d.rule = check("selection") ? RuleKind::Selection : RuleKind::Quantifier;
      ++pos_;
      expect("{");
      while (!check("}")) {
        if (at_end()) fail({"'['", "'}'"});
        d.entries.push_back(rule_entry());
        accept(",");
      }
      expect("}");
    } else {
      fail({"'argmax'", "'selection'", "'quantifier'"});
    }
    d.rule_span = cover(d.rule_span, last_span());
    d.span = cover(start, last_span());
    return d;
  }

  GameDecl game_decl() {
    GameDecl d;
    const Span start = expect("game").span;
    d.name = ident("game name");
    expect("=");
    d.body = expr();
    d.span = cover(start, last_span());
    return d;
  }

  static Expr binary(ExprKind kind, Expr lhs, Expr rhs) {
    Expr e;
    e.kind = kind;
    e.span = cover(lhs.span, rhs.span);
    e.children.push_back(std::move(lhs));
    e.children.push_back(std::move(rhs));
    return e;
  }

  Expr expr() {
    Expr lhs = texpr();
    while (accept(";")) lhs = binary(ExprKind::Compose, std::move(lhs), texpr());
    return lhs;
  }

  Expr texpr() {
    Expr lhs = atom();
    while (accept("||")) lhs = binary(ExprKind::Tensor, std::move(lhs), atom());
    return lhs;
  }

  Expr atom() {
    Expr e = prim();
    if (accept("^*")) {
      e.dual = true;
      e.span = cover(e.span, last_span());
    }
    return e;
  }

  Expr builtin(ExprKind kind, std::size_t min_args, std::size_t max_args) {
    Expr e;
    e.kind = kind;
    e.span = toks_[pos_++].span;
    expect("[");
    e.types.push_back(type());
    while (e.types.size() < max_args && accept(",")) e.types.push_back(type());
    if (e.types.size() < min_args) expect(",");
    expect("]");
    e.span = cover(e.span, last_span());
    return e;
  }

  Expr prim() {
    if (check(TokenKind::Ident)) {
      Expr e;
      e.name = ident("name");
      e.span = e.name.span;
      return e;
    }
    if (check("tau")) return builtin(ExprKind::Tau, 1, 1);
    if (check("copy")) return builtin(ExprKind::Copy, 1, 1);
    if (check("delete")) return builtin(ExprKind::Delete, 1, 1);
    if (check("id")) return builtin(ExprKind::Id, 1, 2);
    if (check("swap")) return builtin(ExprKind::Swap, 2, 2);
    if (check("(")) {
      const Span open = toks_[pos_++].span;
      Expr e = expr();
      expect(")");
      e.span = cover(open, last_span());
      return e;
    }
    fail({"name", "'tau'", "'copy'", "'delete'", "'id'", "'swap'", "'('"});
  }

  const std::vector<Token>& toks_;
  Span eof_;
  std::size_t pos_ = 0;
};

}  // namespace

Program parse(const std::vector<Token>& tokens, Span eof) {
  if (eof.begin == 0 && !tokens.empty()) {
    const Span& last = tokens.back().span;
    eof = Span{last.line, last.column + (last.end - last.begin), last.end, last.end};
  }
  return Parser(tokens, eof).program();
}

Program parse_source(std::string_view source) {
  return parse(tokenize(source), end_span(source));
}

}  // namespace pregame::dsl
