#pragma once

#include <string>
#include <string_view>

#include "fitch/graph.hpp"
#include "fitch/tree.hpp"

namespace fitch {

namespace detail {

inline std::string dot_quote(std::string_view s) {
  std::string out = "\"";
  for (char c : s) {
    if (c == '"' || c == '\\') out += '\\';
    out += c;
  }
  out += '"';
  return out;
}

}  // namespace detail

/// Graphviz text; every vertex is listed so isolated vertices are drawn.
inline std::string to_dot(const SimpleGraph& g) {
  std::string out = "graph {\n";
  for (const auto& n : g.names()) out += "  " + detail::dot_quote(n) + ";\n";
  for (auto [u, v] : g.edges()) {
    out += "  " + detail::dot_quote(g.name(u)) + " -- " +
           detail::dot_quote(g.name(v)) + ";\n";
  }
  return out + "}\n";
}

inline std::string to_dot(const DirectedGraph& d) {
  std::string out = "digraph {\n";
  for (const auto& n : d.names()) out += "  " + detail::dot_quote(n) + ";\n";
  for (auto [u, v] : d.arcs()) {
    out += "  " + detail::dot_quote(d.name(u)) + " -> " +
           detail::dot_quote(d.name(v)) + ";\n";
  }
  return out + "}\n";
}

/// Vertices become nodes "v<id>" labeled with their leaf or inner name; edge
/// labels are emitted as `label` attributes. The root is drawn as a box.
inline std::string to_dot(const LabeledTree& t) {
  std::string out = "graph {\n";
  for (VertexId v : t.vertices()) {
    std::string_view name;
    if (auto n = t.leaf_name(v)) {
      name = *n;
    } else if (auto n = t.inner_name(v)) {
      name = *n;
    }
    out += "  v" + std::to_string(v) + " [label=" + detail::dot_quote(name);
    if (t.root() == v) out += ", shape=box";
    out += "];\n";
  }
  for (const auto& [e, label] : t.edges()) {
    out += "  v" + std::to_string(e.lo) + " -- v" + std::to_string(e.hi) +
           " [label=\"" + to_char(label) + "\"];\n";
  }
  return out + "}\n";
}

}  // namespace fitch
