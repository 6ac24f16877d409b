#pragma once

// Test-only helpers. The brute-force routines here walk explicit tree paths
// and never touch the library's rooted index, so they can check it.

#include <algorithm>
#include <cstdint>
#include <map>
#include <random>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "fitch/fitch.hpp"

namespace fitch::testing {

inline EdgeLabel L(int v) { return v ? EdgeLabel::One : EdgeLabel::Zero; }

/// Star with the given leaves; leaf i hangs on an edge labeled labels[i].
/// Centre is vertex 0, inner name "r", and the root.
inline LabeledTree star(const std::vector<std::string>& names,
                        const std::vector<int>& labels) {
  LabeledTree t;
  const VertexId c = t.add_vertex();
  t.set_inner_name(c, "r");
  t.set_root(c);
  for (std::size_t i = 0; i < names.size(); ++i) {
    t.add_edge(c, t.add_leaf(names[i]), L(labels.at(i)));
  }
  return t;
}

/// Labels on the unique u–v path, found by DFS with an explicit parent map.
inline std::vector<EdgeLabel> brute_path(const LabeledTree& t, VertexId u, VertexId v) {
  std::map<VertexId, VertexId> parent{{u, u}};
  std::vector<VertexId> stack{u};
  while (!stack.empty()) {
    VertexId x = stack.back();
    stack.pop_back();
    for (const auto& [y, l] : t.neighbors(x)) {
      if (!parent.contains(y)) {
        parent[y] = x;
        stack.push_back(y);
      }
    }
  }
  std::vector<EdgeLabel> out;
  for (VertexId x = v; x != u; x = parent.at(x)) {
    out.push_back(*t.label(EdgeRef(x, parent.at(x))));
  }
  return out;
}

inline bool any_one(const std::vector<EdgeLabel>& labels) {
  for (auto l : labels) {
    if (l == EdgeLabel::One) return true;
  }
  return false;
}

inline SimpleGraph brute_undirected_fitch(const LabeledTree& t) {
  SimpleGraph g(t.leaf_names());
  for (const auto& x : g.names()) {
    for (const auto& y : g.names()) {
      if (x < y && any_one(brute_path(t, t.require_leaf(x), t.require_leaf(y)))) {
        g.add_edge(x, y);
      }
    }
  }
  return g;
}

/// Ancestors of v (inclusive), from v up to the root.
inline std::vector<VertexId> brute_ancestors(const LabeledTree& t, VertexId v) {
  std::vector<VertexId> up;
  std::map<VertexId, VertexId> parent{{*t.root(), *t.root()}};
  std::vector<VertexId> stack{*t.root()};
  while (!stack.empty()) {
    VertexId x = stack.back();
    stack.pop_back();
    for (const auto& [y, l] : t.neighbors(x)) {
      if (!parent.contains(y)) {
        parent[y] = x;
        stack.push_back(y);
      }
    }
  }
  for (VertexId x = v;; x = parent.at(x)) {
    up.push_back(x);
    if (x == *t.root()) break;
  }
  return up;
}

inline DirectedGraph brute_directed_fitch(const LabeledTree& t) {
  DirectedGraph d(t.leaf_names());
  for (const auto& x : d.names()) {
    for (const auto& y : d.names()) {
      if (x == y) continue;
      const VertexId vx = t.require_leaf(x);
      const VertexId vy = t.require_leaf(y);
      const auto ax = brute_ancestors(t, vx);
      const std::set<VertexId> sx(ax.begin(), ax.end());
      VertexId top = vy;
      for (VertexId a : brute_ancestors(t, vy)) {
        if (sx.contains(a)) {
          top = a;
          break;
        }
      }
      if (any_one(brute_path(t, top, vy))) d.add_arc(x, y);
    }
  }
  return d;
}

/// Random valid tree with `vertices` vertices built by random attachment;
/// degree-2 inner vertices occur. Leaves are named "L<id>". Root is a random
/// inner vertex (or vertex 0 for tiny trees) when `rooted`.
inline LabeledTree random_tree(std::mt19937_64& rng, int vertices, bool rooted) {
  LabeledTree t;
  std::vector<VertexId> ids{t.add_vertex()};
  std::bernoulli_distribution coin(0.5);
  for (int i = 1; i < vertices; ++i) {
    std::uniform_int_distribution<std::size_t> pick(0, ids.size() - 1);
    const VertexId parent = ids[pick(rng)];
    const VertexId v = t.add_vertex();
    t.add_edge(parent, v, coin(rng) ? EdgeLabel::One : EdgeLabel::Zero);
    ids.push_back(v);
  }
  std::vector<VertexId> inner;
  for (VertexId v : ids) {
    if (t.is_leaf(v)) {
      t.set_leaf_name(v, "L" + std::to_string(v));
    } else {
      inner.push_back(v);
    }
  }
  if (rooted) {
    if (inner.empty()) {
      t.set_root(ids.front());
    } else {
      std::uniform_int_distribution<std::size_t> pick(0, inner.size() - 1);
      t.set_root(inner[pick(rng)]);
    }
  }
  return t;
}

inline std::vector<std::string> vertex_names(int n) {
  std::vector<std::string> out;
  for (int i = 0; i < n; ++i) {
    std::string s = std::to_string(i);
    out.push_back("v" + std::string(4 - std::min<std::size_t>(4, s.size()), '0') + s);
  }
  return out;
}

inline SimpleGraph random_graph(std::mt19937_64& rng, int n, double p) {
  SimpleGraph g(vertex_names(n));
  std::bernoulli_distribution edge(p);
  for (SimpleGraph::Index u = 0; u < g.vertex_count(); ++u) {
    for (SimpleGraph::Index v = u + 1; v < g.vertex_count(); ++v) {
      if (edge(rng)) g.add_edge(u, v);
    }
  }
  return g;
}

inline Partition random_partition(std::mt19937_64& rng, const std::vector<std::string>& names,
                                  int max_blocks) {
  std::uniform_int_distribution<int> k_dist(1, max_blocks);
  const int k = k_dist(rng);
  std::uniform_int_distribution<int> block(0, k - 1);
  std::vector<Partition::Block> blocks(k);
  for (const auto& n : names) blocks[block(rng)].push_back(n);
  std::erase_if(blocks, [](const auto& b) { return b.empty(); });
  return Partition(std::move(blocks));
}

/// Copy of `g` with the pair (u, v) toggled.
inline SimpleGraph toggle_edge(const SimpleGraph& g, SimpleGraph::Index a,
                               SimpleGraph::Index b) {
  SimpleGraph out(g.names());
  const bool present = g.has_edge(a, b);
  for (auto [u, v] : g.edges()) {
    if (u == std::min(a, b) && v == std::max(a, b)) continue;
    out.add_edge(u, v);
  }
  if (!present) out.add_edge(a, b);
  return out;
}

/// Bell numbers via the Bell triangle.
inline std::vector<std::uint64_t> bell_triangle(int n_max) {
  std::vector<std::uint64_t> bell{1};
  std::vector<std::uint64_t> row{1};
  for (int n = 1; n <= n_max; ++n) {
    std::vector<std::uint64_t> next{row.back()};
    for (std::uint64_t x : row) next.push_back(next.back() + x);
    bell.push_back(next.front());
    row = std::move(next);
  }
  return bell;
}

/// Brute-force scan for an induced K1 ∪ K2 over all ordered triples.
inline bool has_induced_k1_k2(const SimpleGraph& g) {
  const auto n = g.vertex_count();
  for (SimpleGraph::Index i = 0; i < n; ++i) {
    for (SimpleGraph::Index a = 0; a < n; ++a) {
      for (SimpleGraph::Index b = a + 1; b < n; ++b) {
        if (i == a || i == b) continue;
        if (g.has_edge(a, b) && !g.has_edge(i, a) && !g.has_edge(i, b)) return true;
      }
    }
  }
  return false;
}

inline SimpleGraph graph_from(const std::vector<std::string>& names,
                              const std::vector<std::pair<std::string, std::string>>& edges) {
  SimpleGraph g(names);
  for (const auto& [u, v] : edges) g.add_edge(u, v);
  return g;
}

/// Leaf names of all named vertices, as a set.
inline std::set<std::string> leaf_set(const LabeledTree& t) {
  auto v = t.leaf_names();
  return {v.begin(), v.end()};
}

}  // namespace fitch::testing
