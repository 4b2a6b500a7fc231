#include "pregame/dsl/checker.hpp"

#include <set>

#include "pregame/dsl/parser.hpp"

namespace pregame::dsl {

namespace {

using Kind = TypedExpr::Kind;

std::string in_quotes(const std::string& s) { return "'" + s + "'"; }

class Checker {
 public:
  Environment run(const Program& program) {
    for (const auto& decl : program.decls) {
      std::visit([this](const auto& d) { declare(d); }, decl);
    }
    return std::move(env_);
  }

 private:
  void claim(const Name& name) {
    if (!declared_.insert(name.text).second) {
      throw Error(ErrorKind::DuplicateDecl, in_quotes(name.text) + " is already declared",
                  name.span);
    }
  }

  PortList ports(const TypeExpr& type) const {
    PortList out;
    for (const auto& n : type.names) {
      auto it = env_.sets.find(n.text);
      if (it == env_.sets.end()) {
        throw Error(ErrorKind::UnknownName, "unknown set " + in_quotes(n.text), n.span);
      }
      out.push_back(it->second);
    }
    return out;
  }

  Index tuple(const PortList& type, const TupleLit& lit) const {
    std::vector<std::string> ls;
    for (const auto& item : lit.items) ls.push_back(item.text);
    if (ls.size() != type.size()) {
      throw Error(ErrorKind::TypeError,
                  "tuple has " + std::to_string(ls.size()) + " components but " +
                      render_ports(type) + " has " + std::to_string(type.size()),
                  lit.span);
    }
    for (std::size_t i = 0; i < ls.size(); ++i) {
      if (!type[i].find(ls[i])) {
        throw Error(ErrorKind::TypeError,
                    in_quotes(ls[i]) + " is not an element of " + type[i].name(),
                    lit.items[i].span);
      }
    }
    return *find_tuple(type, ls);
  }

  void declare(const SetDecl& d) {
    claim(d.name);
    std::vector<std::string> elements;
    std::set<std::string> seen;
    for (const auto& e : d.elements) {
      if (!seen.insert(e.text).second) {
        throw Error(ErrorKind::InvalidDecl,
                    "set " + d.name.text + " lists " + in_quotes(e.text) + " twice", e.span);
      }
      elements.push_back(e.text);
    }
    env_.sets.emplace(d.name.text, FinSet(d.name.text, std::move(elements)));
  }

  void declare(const FunDecl& d) {
    claim(d.name);
    const PortList dom = ports(d.dom);
    const PortList cod = ports(d.cod);
    const Index n = cardinality(dom);
    std::vector<std::optional<Index>> table(n);
    for (const auto& e : d.entries) {
      const Index x = tuple(dom, e.input);
      if (table[x]) {
        throw Error(ErrorKind::InvalidDecl,
                    "fun " + d.name.text + " maps " + tuple_label(dom, x) + " twice",
                    e.input.span);
      }
      table[x] = tuple(cod, e.output);
    }
    std::vector<Index> values;
    for (Index x = 0; x < n; ++x) {
      if (!table[x]) {
        throw Error(ErrorKind::InvalidDecl,
                    "fun " + d.name.text + " is not total: no entry for " + tuple_label(dom, x),
                    d.name.span);
      }
      values.push_back(*table[x]);
    }
    env_.funs.emplace(d.name.text, FinFun(dom, cod, std::move(values)));
  }

  void declare(const PlayerDecl& d) {
    claim(d.name);
    PlayerInfo p{d.name.text, ports(d.observe), ports(d.choose), ports(d.feedback),
                 d.rule,      std::nullopt,     std::nullopt,    d.span};
    try {
      if (d.rule == RuleKind::Argmax) {
        p.selection = argmax_selection(p.choose, p.feedback, d.coordinate);
      } else {
        auto table = rule_table(d, p);
        auto lookup = [table = std::move(table)](const FinFun& k) {
          auto it = table.find(k.table());
          return it == table.end() ? std::vector<Index>{} : it->second;
        };
        if (d.rule == RuleKind::Selection) {
          p.selection = SelectionFunction(p.choose, p.feedback, std::move(lookup));
        } else {
          p.quantifier = Quantifier(p.choose, p.feedback, std::move(lookup));
        }
      }
    } catch (const Error& e) {
      throw e.with_span(d.rule_span);
    }
    env_.players.emplace(d.name.text, std::move(p));
  }

  std::map<std::vector<Index>, std::vector<Index>> rule_table(const PlayerDecl& d,
                                                             const PlayerInfo& p) const {
    const Index ny = cardinality(p.choose);
    const PortList& result_type = d.rule == RuleKind::Selection ? p.choose : p.feedback;
    std::map<std::vector<Index>, std::vector<Index>> table;
    for (const auto& e : d.entries) {
      if (e.continuation.size() != ny) {
        throw Error(ErrorKind::TypeError,
                    "continuation lists " + std::to_string(e.continuation.size()) +
                        " outcomes but " + render_ports(p.choose) + " has " +
                        std::to_string(ny) + " choices",
                    e.span);
      }
      std::vector<Index> k;
      for (const auto& t : e.continuation) k.push_back(tuple(p.feedback, t));
      std::vector<Index> result;
      for (const auto& t : e.result) result.push_back(tuple(result_type, t));
      if (!table.emplace(std::move(k), std::move(result)).second) {
        throw Error(ErrorKind::InvalidDecl, "continuation listed twice", e.span);
      }
    }
    return table;
  }

  void declare(const GameDecl& d) {
    claim(d.name);
    env_.games.emplace(d.name.text, check(d.body));
    env_.game_order.push_back(d.name.text);
  }

  TypedExpr check(const Expr& e) const {
    TypedExpr t;
    t.span = e.span;
    switch (e.kind) {
      case ExprKind::Compose:
      case ExprKind::Tensor: {
        if (e.dual) {
          throw Error(ErrorKind::TypeError, "only computations can be dualized", e.span);
        }
        TypedExpr lhs = check(e.children[0]);
        TypedExpr rhs = check(e.children[1]);
        if (e.kind == ExprKind::Compose) {
          if (!(lhs.codomain == rhs.domain)) {
            throw Error(ErrorKind::InterfaceMismatch,
                        "cannot compose: left side ends at " + render(lhs.codomain) +
                            " but right side starts at " + render(rhs.domain),
                        e.span);
          }
          t.kind = Kind::Compose;
          t.domain = lhs.domain;
          t.codomain = rhs.codomain;
        } else {
          t.kind = Kind::Tensor;
          t.domain = lhs.domain * rhs.domain;
          t.codomain = lhs.codomain * rhs.codomain;
        }
        t.children.push_back(std::move(lhs));
        t.children.push_back(std::move(rhs));
        return t;
      }
      case ExprKind::Ref:
        return reference(e);
      default:
        return builtin(e);
    }
  }

  TypedExpr reference(const Expr& e) const {
    TypedExpr t;
    t.span = e.span;
    t.name = e.name.text;
    if (auto f = env_.funs.find(t.name); f != env_.funs.end()) {
      const FinFun& fun = f->second;
      t.kind = e.dual ? Kind::CoFun : Kind::Fun;
      t.domain = e.dual ? Interface{{}, fun.cod()} : Interface{fun.dom(), {}};
      t.codomain = e.dual ? Interface{{}, fun.dom()} : Interface{fun.cod(), {}};
      return t;
    }
    if (e.dual && (env_.players.count(t.name) || env_.games.count(t.name))) {
      throw Error(ErrorKind::TypeError,
                  "only computations can be dualized; " + in_quotes(t.name) + " is not one",
                  e.span);
    }
    if (auto p = env_.players.find(t.name); p != env_.players.end()) {
      t.kind = Kind::Player;
      t.domain = Interface{p->second.observe, {}};
      t.codomain = Interface{p->second.choose, p->second.feedback};
      return t;
    }
    if (auto g = env_.games.find(t.name); g != env_.games.end()) {
      t.kind = Kind::Game;
      t.domain = g->second.domain;
      t.codomain = g->second.codomain;
      t.children.push_back(g->second);
      return t;
    }
    if (env_.sets.count(t.name)) {
      throw Error(ErrorKind::TypeError, in_quotes(t.name) + " is a set, not a game", e.name.span);
    }
    throw Error(ErrorKind::UnknownName, "unknown name " + in_quotes(t.name), e.name.span);
  }

  TypedExpr builtin(const Expr& e) const {
    TypedExpr t;
    t.span = e.span;
    for (const auto& ty : e.types) t.types.push_back(ports(ty));
    const PortList& a = t.types[0];
    auto dual_only_on_computations = [&] {
      if (e.dual) throw Error(ErrorKind::TypeError, "only computations can be dualized", e.span);
    };
    switch (e.kind) {
      case ExprKind::Tau:
        dual_only_on_computations();
        t.kind = Kind::Tau;
        t.domain = Interface{a, a};
        break;
      case ExprKind::Copy:
        t.kind = e.dual ? Kind::CoCopy : Kind::Copy;
        t.domain = Interface{a, {}};
        t.codomain = Interface{concat(a, a), {}};
        break;
      case ExprKind::Delete:
        t.kind = e.dual ? Kind::CoDelete : Kind::Delete;
        t.domain = Interface{a, {}};
        break;
      case ExprKind::Id:
        t.kind = Kind::Id;
        if (t.types.size() == 2) {
          dual_only_on_computations();
          t.domain = Interface{a, t.types[1]};
        } else {
          t.domain = Interface{a, {}};
        }
        t.codomain = t.domain;
        break;
      case ExprKind::Swap:
        t.kind = e.dual ? Kind::CoSwap : Kind::Swap;
        t.domain = Interface{concat(a, t.types[1]), {}};
        t.codomain = Interface{concat(t.types[1], a), {}};
        break;
      default:
        break;
    }
    if (e.dual && t.kind != Kind::Tau) {
      // The dual of a computation A → B is B* → A*.
      Interface dom{{}, t.codomain.cov};
      Interface cod{{}, t.domain.cov};
      t.domain = std::move(dom);
      t.codomain = std::move(cod);
    }
    return t;
  }

  Environment env_;
  std::set<std::string> declared_;
};

Pregame build(const TypedExpr& t, const Environment& env, const Caps& caps) {
  const PortList* a = t.types.empty() ? nullptr : &t.types[0];
  switch (t.kind) {
    case Kind::Compose:
      return compose(build(t.children[1], env, caps), build(t.children[0], env, caps));
    case Kind::Tensor:
      return tensor(build(t.children[0], env, caps), build(t.children[1], env, caps));
    case Kind::Game:
      return build(t.children[0], env, caps);
    case Kind::Fun:
      return computation(env.funs.at(t.name), t.name);
    case Kind::CoFun:
      return cocomputation(env.funs.at(t.name), t.name);
    case Kind::Player: {
      const PlayerInfo& p = env.players.at(t.name);
      if (p.quantifier) {
        return decision_from_quantifier(p.name, p.observe, p.choose, p.feedback, *p.quantifier,
                                        caps);
      }
      return decision_from_selection(p.name, p.observe, p.choose, p.feedback, *p.selection,
                                     caps);
    }
    case Kind::Tau:
      return teleological_unit(*a);
    case Kind::Copy:
      return computation(copy_fun(*a), "copy");
    case Kind::CoCopy:
      return cocomputation(copy_fun(*a), "copy");
    case Kind::Delete:
      return computation(delete_fun(*a), "delete");
    case Kind::CoDelete:
      return cocomputation(delete_fun(*a), "delete");
    case Kind::Id:
      return identity(t.domain);
    case Kind::Swap:
      return swap(*a, t.types[1]);
    case Kind::CoSwap:
      return cocomputation(swap_fun(*a, t.types[1]), "swap");
  }
  throw Error(ErrorKind::TypeError, "unhandled expression", t.span);
}

}  // namespace

Environment typecheck(const Program& program) {
  return Checker().run(program);
}

Pregame elaborate(const TypedExpr& expr, const Environment& env, const Caps& caps) {
  // Leaves are built bottom-up, so the innermost failing node attaches its
  // span first and with_span keeps it.
  struct Guard {
    static Pregame run(const TypedExpr& t, const Environment& env, const Caps& caps) {
      try {
        if (t.kind == Kind::Compose) {
          return compose(run(t.children[1], env, caps), run(t.children[0], env, caps));
        }
        if (t.kind == Kind::Tensor) {
          return tensor(run(t.children[0], env, caps), run(t.children[1], env, caps));
        }
        if (t.kind == Kind::Game) return run(t.children[0], env, caps);
        return build(t, env, caps);
      } catch (const Error& e) {
        throw e.with_span(t.span);
      }
    }
  };
  return Guard::run(expr, env, caps);
}

Pregame elaborate_game(const Environment& env, const std::string& name, const Caps& caps) {
  auto it = env.games.find(name);
  if (it == env.games.end()) {
    throw Error(ErrorKind::UnknownName, "no game named '" + name + "'");
  }
  return elaborate(it->second, env, caps);
}

Environment load(std::string_view source) {
  return typecheck(parse_source(source));
}

}  // namespace pregame::dsl
