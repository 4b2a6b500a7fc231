#pragma once

#include <string>

#include "pregame/dsl/checker.hpp"

namespace pregame::dsl {

/// Graphviz rendering of a checked game expression.
///
/// Decisions and computations become oval nodes, copy/delete become point
/// junctions and every τ becomes a point "cup" whose outgoing backward
/// wires are styled `dir=back, constraint=false`. Forward wires are solid,
/// backward (contravariant) wires dashed; every wire is labelled with its
/// set name. Identities and swaps are pure wiring and produce no nodes.
/// Node ids follow a left-to-right traversal, so output is reproducible.
std::string render_dot(const TypedExpr& expr, const std::string& name);

}  // namespace pregame::dsl
