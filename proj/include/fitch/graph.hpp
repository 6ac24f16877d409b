#pragma once

#include <algorithm>
#include <compare>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "fitch/error.hpp"

namespace fitch {

namespace detail {

/// Sorts names and rejects empty or repeated ones.
inline std::vector<std::string> canonical_names(std::vector<std::string> names) {
  std::sort(names.begin(), names.end());
  for (std::size_t i = 0; i < names.size(); ++i) {
    if (names[i].empty()) throw Error("empty vertex name");
    if (i > 0 && names[i] == names[i - 1]) {
      throw Error("duplicate vertex '" + names[i] + "'");
    }
  }
  return names;
}

/// Inserts `v` into the sorted list `list`; false if already present.
inline bool sorted_insert(std::vector<std::uint32_t>& list, std::uint32_t v) {
  if (list.empty() || list.back() < v) {
    list.push_back(v);
    return true;
  }
  auto it = std::lower_bound(list.begin(), list.end(), v);
  if (it != list.end() && *it == v) return false;
  list.insert(it, v);
  return true;
}

inline bool sorted_contains(const std::vector<std::uint32_t>& list,
                            std::uint32_t v) {
  return std::binary_search(list.begin(), list.end(), v);
}

}  // namespace detail

/// Undirected simple graph on named vertices.
///
/// Vertices are held in lexicographic name order; `Index` is the position in
/// that order. Adjacency lists are kept sorted, so adding edges in ascending
/// order is amortized O(1) each.
class SimpleGraph {
 public:
  using Index = std::uint32_t;

  SimpleGraph() = default;

  explicit SimpleGraph(std::vector<std::string> vertex_names)
      : names_(detail::canonical_names(std::move(vertex_names))),
        adjacency_(names_.size()) {}

  std::size_t vertex_count() const { return names_.size(); }
  std::size_t edge_count() const { return edge_count_; }

  const std::vector<std::string>& names() const { return names_; }
  const std::string& name(Index v) const { return names_.at(v); }

  std::optional<Index> index_of(std::string_view name) const {
    auto it = std::lower_bound(names_.begin(), names_.end(), name);
    if (it == names_.end() || *it != name) return std::nullopt;
    return static_cast<Index>(it - names_.begin());
  }

  Index require_index(std::string_view name) const {
    if (auto v = index_of(name)) return *v;
    throw Error("unknown vertex '" + std::string(name) + "'");
  }

  const std::vector<Index>& neighbors(Index v) const { return adjacency_.at(v); }
  std::size_t degree(Index v) const { return adjacency_.at(v).size(); }

  bool has_edge(Index u, Index v) const {
    return detail::sorted_contains(adjacency_.at(u), v);
  }

  bool has_edge(std::string_view u, std::string_view v) const {
    auto iu = index_of(u);
    auto iv = index_of(v);
    return iu && iv && has_edge(*iu, *iv);
  }

  void add_edge(Index u, Index v) {
    if (u >= names_.size() || v >= names_.size()) {
      throw Error("edge endpoint out of range");
    }
    if (u == v) throw Error("self-loop on '" + names_[u] + "'");
    if (!detail::sorted_insert(adjacency_[u], v)) {
      throw Error("duplicate edge {" + names_[u] + "," + names_[v] + "}");
    }
    detail::sorted_insert(adjacency_[v], u);
    ++edge_count_;
  }

  void add_edge(std::string_view u, std::string_view v) {
    add_edge(require_index(u), require_index(v));
  }

  /// Edges as index pairs (u < v) in ascending order.
  std::vector<std::pair<Index, Index>> edges() const {
    std::vector<std::pair<Index, Index>> out;
    out.reserve(edge_count_);
    for (Index u = 0; u < adjacency_.size(); ++u) {
      for (Index v : adjacency_[u]) {
        if (u < v) out.emplace_back(u, v);
      }
    }
    return out;
  }

  friend auto operator<=>(const SimpleGraph&, const SimpleGraph&) = default;

 private:
  std::vector<std::string> names_;
  std::vector<std::vector<Index>> adjacency_;
  std::size_t edge_count_ = 0;
};

/// Directed graph on named vertices, without self-loops.
class DirectedGraph {
 public:
  using Index = std::uint32_t;

  DirectedGraph() = default;

  explicit DirectedGraph(std::vector<std::string> vertex_names)
      : names_(detail::canonical_names(std::move(vertex_names))),
        out_(names_.size()) {}

  std::size_t vertex_count() const { return names_.size(); }
  std::size_t arc_count() const { return arc_count_; }

  const std::vector<std::string>& names() const { return names_; }
  const std::string& name(Index v) const { return names_.at(v); }

  std::optional<Index> index_of(std::string_view name) const {
    auto it = std::lower_bound(names_.begin(), names_.end(), name);
    if (it == names_.end() || *it != name) return std::nullopt;
    return static_cast<Index>(it - names_.begin());
  }

  Index require_index(std::string_view name) const {
    if (auto v = index_of(name)) return *v;
    throw Error("unknown vertex '" + std::string(name) + "'");
  }

  const std::vector<Index>& successors(Index v) const { return out_.at(v); }

  bool has_arc(Index from, Index to) const {
    return detail::sorted_contains(out_.at(from), to);
  }

  bool has_arc(std::string_view from, std::string_view to) const {
    auto f = index_of(from);
    auto t = index_of(to);
    return f && t && has_arc(*f, *t);
  }

  void add_arc(Index from, Index to) {
    if (from >= names_.size() || to >= names_.size()) {
      throw Error("arc endpoint out of range");
    }
    if (from == to) throw Error("self-loop on '" + names_[from] + "'");
    if (!detail::sorted_insert(out_[from], to)) {
      throw Error("duplicate arc (" + names_[from] + "," + names_[to] + ")");
    }
    ++arc_count_;
  }

  void add_arc(std::string_view from, std::string_view to) {
    add_arc(require_index(from), require_index(to));
  }

  std::vector<std::pair<Index, Index>> arcs() const {
    std::vector<std::pair<Index, Index>> out;
    out.reserve(arc_count_);
    for (Index u = 0; u < out_.size(); ++u) {
      for (Index v : out_[u]) out.emplace_back(u, v);
    }
    return out;
  }

  friend auto operator<=>(const DirectedGraph&, const DirectedGraph&) = default;

 private:
  std::vector<std::string> names_;
  std::vector<std::vector<Index>> out_;
  std::size_t arc_count_ = 0;
};

/// Edge {x,y} iff arc (x,y) or arc (y,x).
inline SimpleGraph underlying_undirected(const DirectedGraph& d) {
  SimpleGraph g(d.names());
  for (auto [u, v] : d.arcs()) {
    if (!g.has_edge(u, v)) g.add_edge(u, v);
  }
  return g;
}

/// Subgraph induced on the named vertices.
inline SimpleGraph induced_subgraph(const SimpleGraph& g,
                                    const std::vector<std::string>& keep) {
  SimpleGraph out(keep);
  std::vector<SimpleGraph::Index> map;
  map.reserve(out.vertex_count());
  for (const auto& name : out.names()) map.push_back(g.require_index(name));
  for (SimpleGraph::Index a = 0; a < map.size(); ++a) {
    for (SimpleGraph::Index b = a + 1; b < map.size(); ++b) {
      if (g.has_edge(map[a], map[b])) out.add_edge(a, b);
    }
  }
  return out;
}

}  // namespace fitch
