#include "pregame/dsl/render.hpp"

#include <sstream>

namespace pregame::dsl {

namespace {

using Kind = TypedExpr::Kind;

enum class Wire { Forward, Backward, Cup };

struct Node {
  std::string id;
  std::string label;
  std::string shape;  // empty for joints
  bool joint = false;
};

struct Edge {
  std::size_t from;
  std::size_t to;
  std::string label;
  Wire wire;
  bool dead = false;
};

/// Attachment points of a sub-diagram, one per port.
struct Fragment {
  std::vector<std::size_t> cov_in;
  std::vector<std::size_t> cov_out;
  std::vector<std::size_t> contra_in;
  std::vector<std::size_t> contra_out;
};

class DotBuilder {
 public:
  std::string run(const TypedExpr& root, const std::string& name) {
    Fragment f = build(root);
    for (std::size_t i = 0; i < f.cov_in.size(); ++i) {
      connect(boundary("in", i), f.cov_in[i], root.domain.cov[i].name(), Wire::Forward);
    }
    for (std::size_t i = 0; i < f.cov_out.size(); ++i) {
      connect(f.cov_out[i], boundary("out", i), root.codomain.cov[i].name(), Wire::Forward);
    }
    for (std::size_t i = 0; i < f.contra_in.size(); ++i) {
      connect(boundary("rin", i), f.contra_in[i], root.codomain.contra[i].name(),
              Wire::Backward);
    }
    for (std::size_t i = 0; i < f.contra_out.size(); ++i) {
      connect(f.contra_out[i], boundary("sout", i), root.domain.contra[i].name(),
              Wire::Backward);
    }
    splice_joints();
    return emit(name);
  }

 private:
  std::size_t node(std::string label, std::string shape) {
    nodes_.push_back(Node{"n" + std::to_string(counter_++), std::move(label), std::move(shape)});
    return nodes_.size() - 1;
  }

  std::size_t joint() {
    nodes_.push_back(Node{"j", "", "", true});
    return nodes_.size() - 1;
  }

  std::size_t boundary(const std::string& prefix, std::size_t i) {
    nodes_.push_back(Node{prefix + std::to_string(i), "", "none"});
    return nodes_.size() - 1;
  }

  void connect(std::size_t from, std::size_t to, const std::string& label, Wire wire) {
    edges_.push_back(Edge{from, to, label, wire});
  }

  static std::vector<std::size_t> repeat(std::size_t n, std::size_t value) {
    return std::vector<std::size_t>(n, value);
  }

  std::vector<std::size_t> joints(std::size_t n) {
    std::vector<std::size_t> out;
    for (std::size_t i = 0; i < n; ++i) out.push_back(joint());
    return out;
  }

  Fragment build(const TypedExpr& t) {
    const std::size_t nx = t.domain.cov.size();
    const std::size_t ny = t.codomain.cov.size();
    const std::size_t ns = t.domain.contra.size();
    const std::size_t nr = t.codomain.contra.size();
    switch (t.kind) {
      case Kind::Compose: {
        Fragment g = build(t.children[0]);
        Fragment h = build(t.children[1]);
        const Interface& mid = t.children[0].codomain;
        for (std::size_t i = 0; i < mid.cov.size(); ++i) {
          connect(g.cov_out[i], h.cov_in[i], mid.cov[i].name(), Wire::Forward);
        }
        for (std::size_t i = 0; i < mid.contra.size(); ++i) {
          connect(h.contra_out[i], g.contra_in[i], mid.contra[i].name(), Wire::Backward);
        }
        return Fragment{g.cov_in, h.cov_out, h.contra_in, g.contra_out};
      }
      case Kind::Tensor: {
        Fragment g = build(t.children[0]);
        Fragment h = build(t.children[1]);
        auto cat = [](std::vector<std::size_t> a, const std::vector<std::size_t>& b) {
          a.insert(a.end(), b.begin(), b.end());
          return a;
        };
        return Fragment{cat(g.cov_in, h.cov_in), cat(g.cov_out, h.cov_out),
                        cat(g.contra_in, h.contra_in), cat(g.contra_out, h.contra_out)};
      }
      case Kind::Game:
        return build(t.children[0]);
      case Kind::Player:
      case Kind::Fun:
      case Kind::CoFun: {
        const auto n = node(t.kind == Kind::CoFun ? t.name + "*" : t.name, "oval");
        return Fragment{repeat(nx, n), repeat(ny, n), repeat(nr, n), repeat(ns, n)};
      }
      case Kind::Copy:
      case Kind::CoCopy:
      case Kind::Delete:
      case Kind::CoDelete: {
        const bool copy = t.kind == Kind::Copy || t.kind == Kind::CoCopy;
        const auto n = node(copy ? "copy" : "delete", "point");
        return Fragment{repeat(nx, n), repeat(ny, n), repeat(nr, n), repeat(ns, n)};
      }
      case Kind::Tau: {
        cup_nodes_.push_back(node("tau", "point"));
        const auto n = cup_nodes_.back();
        return Fragment{repeat(nx, n), {}, {}, repeat(ns, n)};
      }
      case Kind::Id: {
        const auto cov = joints(nx);
        const auto contra = joints(ns);
        return Fragment{cov, cov, contra, contra};
      }
      case Kind::Swap:
      case Kind::CoSwap: {
        // Ports A ++ B on one side meet B ++ A on the other.
        const std::size_t a = t.types[0].size();
        const std::size_t b = t.types[1].size();
        const auto js = joints(a + b);
        std::vector<std::size_t> crossed(js.begin() + a, js.end());
        crossed.insert(crossed.end(), js.begin(), js.begin() + a);
        if (t.kind == Kind::Swap) return Fragment{js, crossed, {}, {}};
        // Dual: codomain contra is A ++ B, domain contra is B ++ A.
        return Fragment{{}, {}, js, crossed};
      }
    }
    return {};
  }

  bool is_cup(std::size_t n) const {
    for (auto c : cup_nodes_) {
      if (c == n) return true;
    }
    return false;
  }

  void splice_joints() {
    for (std::size_t j = 0; j < nodes_.size(); ++j) {
      if (!nodes_[j].joint) continue;
      Edge* in = nullptr;
      Edge* out = nullptr;
      for (auto& e : edges_) {
        if (e.dead) continue;
        if (e.to == j && !in) in = &e;
        if (e.from == j && !out) out = &e;
      }
      if (!in || !out || in == out) continue;
      in->to = out->to;
      if (out->wire == Wire::Cup) in->wire = Wire::Cup;
      out->dead = true;
    }
    for (auto& e : edges_) {
      if (!e.dead && is_cup(e.from)) e.wire = Wire::Cup;
    }
  }

  static std::string quote(const std::string& s) {
    std::string out = "\"";
    for (char c : s) {
      if (c == '"' || c == '\\') out += '\\';
      out += c;
    }
    return out + "\"";
  }

  std::string emit(const std::string& name) const {
    std::ostringstream out;
    out << "digraph " << quote(name) << " {\n";
    out << "  rankdir=TB;\n";
    for (const auto& n : nodes_) {
      if (n.joint) continue;
      out << "  " << n.id << " [label=" << quote(n.label) << ", shape=" << n.shape;
      if (n.shape == "point") out << ", width=0.08";
      out << "];\n";
    }
    for (const auto& e : edges_) {
      if (e.dead) continue;
      out << "  " << nodes_[e.from].id << " -> " << nodes_[e.to].id
          << " [label=" << quote(e.label);
      if (e.wire == Wire::Backward) out << ", style=dashed";
      if (e.wire == Wire::Cup) out << ", style=dashed, dir=back, constraint=false";
      out << "];\n";
    }
    out << "}\n";
    return out.str();
  }

  std::vector<Node> nodes_;
  std::vector<Edge> edges_;
  std::vector<std::size_t> cup_nodes_;
  std::size_t counter_ = 0;
};

}  // namespace

std::string render_dot(const TypedExpr& expr, const std::string& name) {
  return DotBuilder().run(expr, name);
}

}  // namespace pregame::dsl
