#include "pregame/dsl/ast.hpp"

#include <sstream>

namespace pregame::dsl {

namespace {

std::string print_tuple(const TupleLit& t) {
  if (t.items.size() == 1) return t.items.front().text;
  std::string out = "(";
  for (std::size_t i = 0; i < t.items.size(); ++i) {
    if (i) out += ", ";
    out += t.items[i].text;
  }
  return out + ")";
}

template <typename T, typename F>
std::string join(const std::vector<T>& items, const char* sep, F&& f) {
  std::string out;
  for (std::size_t i = 0; i < items.size(); ++i) {
    if (i) out += sep;
    out += f(items[i]);
  }
  return out;
}

// Binding levels: 0 = compose, 1 = tensor, 2 = atom.
std::string print_at(const Expr& e, int level) {
  std::string out;
  int own = 2;
  switch (e.kind) {
    case ExprKind::Compose:
      own = 0;
      out = print_at(e.children[0], 0) + " ; " + print_at(e.children[1], 1);
      break;
    case ExprKind::Tensor:
      own = 1;
      out = print_at(e.children[0], 1) + " || " + print_at(e.children[1], 2);
      break;
    case ExprKind::Ref:
      out = e.name.text;
      break;
    case ExprKind::Tau:
    case ExprKind::Copy:
    case ExprKind::Delete:
    case ExprKind::Id:
    case ExprKind::Swap: {
      static const char* names[] = {"", "", "", "tau", "copy", "delete", "id", "swap"};
      out = std::string(names[static_cast<int>(e.kind)]) + "[" +
            join(e.types, ", ", [](const TypeExpr& t) { return print(t); }) + "]";
      break;
    }
  }
  if (own < level || (e.dual && own < 2)) out = "(" + out + ")";
  if (e.dual) out += "^*";
  return out;
}

}  // namespace

std::string print(const TypeExpr& type) {
  if (type.names.empty()) return "1";
  return join(type.names, "*", [](const Name& n) { return n.text; });
}

std::string print(const Expr& expr) { return print_at(expr, 0); }

std::string print(const Program& program) {
  std::ostringstream out;
  for (const auto& decl : program.decls) {
    if (const auto* s = std::get_if<SetDecl>(&decl)) {
      out << "set " << s->name.text << " = {"
          << join(s->elements, ", ", [](const Name& n) { return n.text; }) << "}\n";
    } else if (const auto* f = std::get_if<FunDecl>(&decl)) {
      out << "fun " << f->name.text << " : " << print(f->dom) << " -> " << print(f->cod)
          << " = {\n";
      for (const auto& e : f->entries) {
        out << "  " << print_tuple(e.input) << " -> " << print_tuple(e.output) << "\n";
      }
      out << "}\n";
    } else if (const auto* p = std::get_if<PlayerDecl>(&decl)) {
      out << "player " << p->name.text << " : " << print(p->observe) << " -> "
          << print(p->choose) << " feedback " << print(p->feedback);
      if (p->rule == RuleKind::Argmax) {
        out << " argmax";
        if (p->explicit_coordinate) out << "[" << p->coordinate << "]";
        out << "\n";
      } else {
        out << (p->rule == RuleKind::Selection ? " selection {\n" : " quantifier {\n");
        for (const auto& e : p->entries) {
          out << "  [" << join(e.continuation, ", ", print_tuple) << "] -> {"
              << join(e.result, ", ", print_tuple) << "}\n";
        }
        out << "}\n";
      }
    } else if (const auto* g = std::get_if<GameDecl>(&decl)) {
      out << "game " << g->name.text << " = " << print(g->body) << "\n";
    }
  }
  return out.str();
}

}  // namespace pregame::dsl
