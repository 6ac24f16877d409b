#pragma once

#include <algorithm>
#include <bit>
#include <cstdint>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "fitch/graph.hpp"
#include "fitch/tree.hpp"

namespace fitch {

namespace detail {

/// Dense rooted view of a tree: parents, depths, and the number of 1-edges
/// on each root path. LCA queries use binary lifting.
class RootedIndex {
 public:
  RootedIndex(const LabeledTree& tree, VertexId root) {
    std::map<VertexId, int> dense;
    for (VertexId v : tree.vertices()) {
      dense.emplace(v, static_cast<int>(dense.size()));
    }
    const int n = static_cast<int>(dense.size());
    parent_.assign(n, -1);
    depth_.assign(n, 0);
    ones_.assign(n, 0);

    std::vector<std::pair<VertexId, int>> stack{{root, dense.at(root)}};
    parent_[dense.at(root)] = dense.at(root);
    while (!stack.empty()) {
      const auto [v, dv] = stack.back();
      stack.pop_back();
      for (const auto& [w, label] : tree.neighbors(v)) {
        const int dw = dense.at(w);
        if (parent_[dw] != -1) continue;
        parent_[dw] = dv;
        depth_[dw] = depth_[dv] + 1;
        ones_[dw] = ones_[dv] + (label == EdgeLabel::One ? 1 : 0);
        stack.emplace_back(w, dw);
      }
    }

    const int levels = std::max(1, static_cast<int>(std::bit_width(
                                       static_cast<unsigned>(n))));
    up_.assign(levels, parent_);
    for (int k = 1; k < levels; ++k) {
      for (int v = 0; v < n; ++v) up_[k][v] = up_[k - 1][up_[k - 1][v]];
    }

    for (const auto& [v, name] : tree.leaf_name_map()) {
      leaves_.emplace_back(name, dense.at(v));
    }
    std::sort(leaves_.begin(), leaves_.end());
  }

  int lca(int a, int b) const {
    if (depth_[a] < depth_[b]) std::swap(a, b);
    int diff = depth_[a] - depth_[b];
    for (int k = 0; diff; ++k, diff >>= 1) {
      if (diff & 1) a = up_[k][a];
    }
    if (a == b) return a;
    for (int k = static_cast<int>(up_.size()) - 1; k >= 0; --k) {
      if (up_[k][a] != up_[k][b]) {
        a = up_[k][a];
        b = up_[k][b];
      }
    }
    return parent_[a];
  }

  /// Number of 1-edges between `ancestor` and `v`.
  int ones_between(int ancestor, int v) const { return ones_[v] - ones_[ancestor]; }

  /// (name, dense index) of every named leaf, sorted by name.
  const std::vector<std::pair<std::string, int>>& leaves() const { return leaves_; }

  std::vector<std::string> leaf_names() const {
    std::vector<std::string> out;
    out.reserve(leaves_.size());
    for (const auto& [name, v] : leaves_) out.push_back(name);
    return out;
  }

 private:
  std::vector<int> parent_;
  std::vector<int> depth_;
  std::vector<int> ones_;
  std::vector<std::vector<int>> up_;
  std::vector<std::pair<std::string, int>> leaves_;
};

/// Any inner vertex, or any vertex when the tree has at most two.
inline VertexId internal_root(const LabeledTree& tree) {
  for (VertexId v : tree.vertices()) {
    if (!tree.is_leaf(v)) return v;
  }
  return tree.vertices().front();
}

}  // namespace detail

/// Undirected Fitch graph: leaves x, y are adjacent iff the x–y path carries
/// a 1-edge. The root, if any, is irrelevant.
inline SimpleGraph undirected_fitch(const LabeledTree& tree) {
  require_valid(tree);
  const detail::RootedIndex index(tree, detail::internal_root(tree));
  const auto& leaves = index.leaves();
  SimpleGraph g(index.leaf_names());
  for (SimpleGraph::Index i = 0; i < leaves.size(); ++i) {
    for (SimpleGraph::Index j = i + 1; j < leaves.size(); ++j) {
      const int x = leaves[i].second;
      const int y = leaves[j].second;
      const int top = index.lca(x, y);
      if (index.ones_between(top, x) + index.ones_between(top, y) > 0) {
        g.add_edge(i, j);
      }
    }
  }
  return g;
}

/// Directed Fitch graph: arc (x,y) iff a 1-edge lies on the path from
/// lca(x,y) down to y.
inline DirectedGraph directed_fitch(const LabeledTree& tree) {
  require_valid(tree);
  const auto root = tree.root();
  if (!root) throw Error("directed Fitch graph requires a root");
  const detail::RootedIndex index(tree, *root);
  const auto& leaves = index.leaves();
  DirectedGraph d(index.leaf_names());
  for (DirectedGraph::Index i = 0; i < leaves.size(); ++i) {
    for (DirectedGraph::Index j = 0; j < leaves.size(); ++j) {
      if (i == j) continue;
      const int x = leaves[i].second;
      const int y = leaves[j].second;
      if (index.ones_between(index.lca(x, y), y) > 0) d.add_arc(i, j);
    }
  }
  return d;
}

}  // namespace fitch
