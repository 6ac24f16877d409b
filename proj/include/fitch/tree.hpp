#pragma once

#include <algorithm>
#include <cstdint>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "fitch/error.hpp"

namespace fitch {

using VertexId = std::uint32_t;

enum class EdgeLabel : std::uint8_t { Zero = 0, One = 1 };

constexpr EdgeLabel operator|(EdgeLabel a, EdgeLabel b) {
  return (a == EdgeLabel::One || b == EdgeLabel::One) ? EdgeLabel::One
                                                      : EdgeLabel::Zero;
}

constexpr char to_char(EdgeLabel l) { return l == EdgeLabel::One ? '1' : '0'; }

/// Unordered vertex pair naming an edge. Stored with `lo < hi`.
struct EdgeRef {
  VertexId lo;
  VertexId hi;

  EdgeRef(VertexId a, VertexId b) : lo(std::min(a, b)), hi(std::max(a, b)) {}

  friend auto operator<=>(const EdgeRef&, const EdgeRef&) = default;
};

/// A finite tree with {0,1}-labeled edges, named leaves and an optional root.
///
/// Vertex ids are opaque and never reused within one value. Mutators only
/// maintain local consistency (endpoints exist, no duplicate edges); the
/// global invariants are checked by `validate`.
class LabeledTree {
 public:
  using Neighbors = std::map<VertexId, EdgeLabel>;

  VertexId add_vertex() {
    const VertexId id = next_id_++;
    adjacency_.emplace(id, Neighbors{});
    return id;
  }

  VertexId add_leaf(std::string name) {
    const VertexId id = add_vertex();
    leaf_names_.emplace(id, std::move(name));
    return id;
  }

  void add_edge(VertexId u, VertexId v, EdgeLabel label) {
    require_vertex(u);
    require_vertex(v);
    if (u == v) throw Error("self-loop on vertex " + std::to_string(u));
    if (adjacency_[u].contains(v)) {
      throw Error("edge {" + std::to_string(u) + "," + std::to_string(v) +
                  "} already present");
    }
    adjacency_[u][v] = label;
    adjacency_[v][u] = label;
  }

  void remove_edge(EdgeRef e) {
    require_edge(e);
    adjacency_[e.lo].erase(e.hi);
    adjacency_[e.hi].erase(e.lo);
  }

  void set_label(EdgeRef e, EdgeLabel label) {
    require_edge(e);
    adjacency_[e.lo][e.hi] = label;
    adjacency_[e.hi][e.lo] = label;
  }

  /// Removes `v` and all incident edges. Clears the root if it was `v`.
  void remove_vertex(VertexId v) {
    require_vertex(v);
    for (const auto& [w, label] : adjacency_[v]) adjacency_[w].erase(v);
    adjacency_.erase(v);
    leaf_names_.erase(v);
    inner_names_.erase(v);
    if (root_ == v) root_.reset();
  }

  void set_leaf_name(VertexId v, std::string name) {
    require_vertex(v);
    leaf_names_[v] = std::move(name);
  }

  void clear_leaf_name(VertexId v) { leaf_names_.erase(v); }

  /// Cosmetic name of an inner vertex (e.g. the "r" in "(a:0,b:1)r;").
  /// Not part of the leaf set and not subject to uniqueness.
  void set_inner_name(VertexId v, std::string name) {
    require_vertex(v);
    inner_names_[v] = std::move(name);
  }

  void clear_inner_name(VertexId v) { inner_names_.erase(v); }

  void set_root(std::optional<VertexId> v) {
    if (v) require_vertex(*v);
    root_ = v;
  }

  bool contains(VertexId v) const { return adjacency_.contains(v); }
  bool empty() const { return adjacency_.empty(); }
  std::size_t vertex_count() const { return adjacency_.size(); }

  std::size_t edge_count() const {
    std::size_t twice = 0;
    for (const auto& [v, nbrs] : adjacency_) twice += nbrs.size();
    return twice / 2;
  }

  std::vector<VertexId> vertices() const {
    std::vector<VertexId> out;
    out.reserve(adjacency_.size());
    for (const auto& [v, nbrs] : adjacency_) out.push_back(v);
    return out;
  }

  /// All edges in ascending (lo, hi) order.
  std::vector<std::pair<EdgeRef, EdgeLabel>> edges() const {
    std::vector<std::pair<EdgeRef, EdgeLabel>> out;
    for (const auto& [v, nbrs] : adjacency_) {
      for (const auto& [w, label] : nbrs) {
        if (v < w) out.emplace_back(EdgeRef(v, w), label);
      }
    }
    return out;
  }

  const Neighbors& neighbors(VertexId v) const {
    require_vertex(v);
    return adjacency_.at(v);
  }

  std::size_t degree(VertexId v) const { return neighbors(v).size(); }

  /// Degree at most one. The lone vertex of a one-vertex tree is a leaf.
  bool is_leaf(VertexId v) const { return degree(v) <= 1; }

  bool has_edge(EdgeRef e) const {
    auto it = adjacency_.find(e.lo);
    return it != adjacency_.end() && it->second.contains(e.hi);
  }

  std::optional<EdgeLabel> label(EdgeRef e) const {
    auto it = adjacency_.find(e.lo);
    if (it == adjacency_.end()) return std::nullopt;
    auto jt = it->second.find(e.hi);
    if (jt == it->second.end()) return std::nullopt;
    return jt->second;
  }

  std::optional<std::string_view> leaf_name(VertexId v) const {
    auto it = leaf_names_.find(v);
    if (it == leaf_names_.end()) return std::nullopt;
    return std::string_view(it->second);
  }

  std::optional<std::string_view> inner_name(VertexId v) const {
    auto it = inner_names_.find(v);
    if (it == inner_names_.end()) return std::nullopt;
    return std::string_view(it->second);
  }

  const std::map<VertexId, std::string>& leaf_name_map() const {
    return leaf_names_;
  }

  /// First vertex (by id) carrying leaf name `name`.
  std::optional<VertexId> find_leaf(std::string_view name) const {
    for (const auto& [v, n] : leaf_names_) {
      if (n == name) return v;
    }
    return std::nullopt;
  }

  VertexId require_leaf(std::string_view name) const {
    if (auto v = find_leaf(name)) return *v;
    throw Error("unknown leaf '" + std::string(name) + "'");
  }

  /// Leaf names in lexicographic order.
  std::vector<std::string> leaf_names() const {
    std::vector<std::string> out;
    out.reserve(leaf_names_.size());
    for (const auto& [v, n] : leaf_names_) out.push_back(n);
    std::sort(out.begin(), out.end());
    return out;
  }

  std::optional<VertexId> root() const { return root_; }

  friend bool operator==(const LabeledTree& a, const LabeledTree& b) {
    return a.adjacency_ == b.adjacency_ && a.leaf_names_ == b.leaf_names_ &&
           a.inner_names_ == b.inner_names_ && a.root_ == b.root_;
  }

 private:
  void require_vertex(VertexId v) const {
    if (!adjacency_.contains(v)) {
      throw Error("vertex " + std::to_string(v) + " not in tree");
    }
  }

  void require_edge(EdgeRef e) const {
    if (!has_edge(e)) {
      throw Error("edge {" + std::to_string(e.lo) + "," +
                  std::to_string(e.hi) + "} not in tree");
    }
  }

  std::map<VertexId, Neighbors> adjacency_;
  std::map<VertexId, std::string> leaf_names_;
  std::map<VertexId, std::string> inner_names_;
  std::optional<VertexId> root_;
  VertexId next_id_ = 0;
};

/// Returns the first violated tree invariant, or nullopt if the tree is valid.
inline std::optional<std::string> validate(const LabeledTree& tree) {
  if (tree.empty()) return "empty tree";

  const auto verts = tree.vertices();
  std::set<VertexId> seen{verts.front()};
  std::vector<VertexId> stack{verts.front()};
  while (!stack.empty()) {
    const VertexId v = stack.back();
    stack.pop_back();
    for (const auto& [w, label] : tree.neighbors(v)) {
      if (seen.insert(w).second) stack.push_back(w);
    }
  }
  if (seen.size() != verts.size()) return "not connected";
  if (tree.edge_count() + 1 != tree.vertex_count()) return "contains a cycle";

  for (VertexId v : verts) {
    const auto name = tree.leaf_name(v);
    if (tree.is_leaf(v) && !name) {
      return "unnamed leaf (vertex " + std::to_string(v) + ")";
    }
    if (name && !tree.is_leaf(v)) {
      return "leaf name '" + std::string(*name) + "' on inner vertex";
    }
    if (name && name->empty()) return "empty leaf name";
  }

  std::set<std::string_view> names;
  for (const auto& [v, n] : tree.leaf_name_map()) {
    if (!names.insert(n).second) return "duplicate leaf name '" + n + "'";
  }

  if (auto r = tree.root(); r && !tree.contains(*r)) return "root not in tree";
  return std::nullopt;
}

inline void require_valid(const LabeledTree& tree) {
  if (auto violation = validate(tree)) {
    throw Error("invalid tree: " + *violation);
  }
}

/// Replaces every maximal chain of degree-2 vertices by a single edge whose
/// label is the OR of the chain's labels. A suppressed root moves to a chain
/// endpoint, preferring an inner endpoint, then the smaller id.
inline LabeledTree suppress_degree2(const LabeledTree& tree) {
  for (VertexId v : tree.vertices()) {
    if (tree.degree(v) == 2 && tree.leaf_name(v)) {
      throw Error("cannot suppress leaf '" + std::string(*tree.leaf_name(v)) +
                  "'");
    }
  }
  require_valid(tree);

  LabeledTree out = tree;
  for (VertexId start : tree.vertices()) {
    if (!out.contains(start) || out.degree(start) != 2) continue;

    // Walk outwards in both directions until a vertex of degree != 2.
    std::vector<VertexId> chain{start};
    VertexId ends[2];
    EdgeLabel merged = EdgeLabel::Zero;
    auto it = out.neighbors(start).begin();
    for (int side = 0; side < 2; ++side, ++it) {
      VertexId prev = start;
      VertexId cur = it->first;
      merged = merged | it->second;
      while (out.degree(cur) == 2) {
        chain.push_back(cur);
        const auto& nbrs = out.neighbors(cur);
        auto next = nbrs.begin();
        if (next->first == prev) ++next;
        merged = merged | next->second;
        prev = cur;
        cur = next->first;
      }
      ends[side] = cur;
    }

    const auto root = out.root();
    const bool root_suppressed =
        root && std::find(chain.begin(), chain.end(), *root) != chain.end();
    for (VertexId v : chain) out.remove_vertex(v);
    out.add_edge(ends[0], ends[1], merged);
    if (root_suppressed) {
      VertexId a = std::min(ends[0], ends[1]);
      VertexId b = std::max(ends[0], ends[1]);
      if (out.is_leaf(a) && !out.is_leaf(b)) std::swap(a, b);
      out.set_root(a);
    }
  }
  return out;
}

/// Same tree with root `v`. A leaf may only be the root of a tree with at
/// most two vertices.
inline LabeledTree reroot(const LabeledTree& tree, VertexId v) {
  if (!tree.contains(v)) {
    throw Error("vertex " + std::to_string(v) + " not in tree");
  }
  if (tree.vertex_count() >= 3 && tree.is_leaf(v)) {
    throw Error("leaf root not allowed");
  }
  LabeledTree out = tree;
  out.set_root(v);
  return out;
}

/// Merges the endpoints of inner edge `e`. The merged vertex keeps the
/// smaller id; if either endpoint was the root, the merged vertex is.
inline LabeledTree contract_edge(const LabeledTree& tree, EdgeRef e) {
  if (!tree.has_edge(e)) {
    throw Error("edge {" + std::to_string(e.lo) + "," + std::to_string(e.hi) +
                "} not in tree");
  }
  if (tree.is_leaf(e.lo) || tree.is_leaf(e.hi)) {
    throw Error("cannot contract leaf edge");
  }

  LabeledTree out = tree;
  const auto root = out.root();
  const bool touches_root = root && (*root == e.lo || *root == e.hi);
  std::optional<std::string> name;
  if (touches_root) {
    if (auto n = out.inner_name(*root)) name = std::string(*n);
  } else if (auto n = out.inner_name(e.lo)) {
    name = std::string(*n);
  }

  const auto moved = out.neighbors(e.hi);
  out.remove_vertex(e.hi);
  for (const auto& [w, label] : moved) {
    if (w != e.lo) out.add_edge(e.lo, w, label);
  }
  if (name) {
    out.set_inner_name(e.lo, *name);
  } else {
    out.clear_inner_name(e.lo);
  }
  if (touches_root) out.set_root(e.lo);
  return out;
}

namespace detail {

/// Path from `from` to `to` as the list of edge labels along it.
inline std::vector<EdgeLabel> path_labels(const LabeledTree& tree,
                                          VertexId from, VertexId to) {
  std::map<VertexId, std::pair<VertexId, EdgeLabel>> parent;
  parent.emplace(from, std::make_pair(from, EdgeLabel::Zero));
  std::vector<VertexId> stack{from};
  while (!stack.empty() && !parent.contains(to)) {
    const VertexId v = stack.back();
    stack.pop_back();
    for (const auto& [w, label] : tree.neighbors(v)) {
      if (parent.emplace(w, std::make_pair(v, label)).second) {
        stack.push_back(w);
      }
    }
  }
  if (!parent.contains(to)) throw Error("vertices are not connected");
  std::vector<EdgeLabel> labels;
  for (VertexId v = to; v != from; v = parent.at(v).first) {
    labels.push_back(parent.at(v).second);
  }
  return labels;
}

/// Parent of every vertex when the tree hangs from `root`.
inline std::map<VertexId, VertexId> parent_map(const LabeledTree& tree,
                                               VertexId root) {
  std::map<VertexId, VertexId> parent{{root, root}};
  std::vector<VertexId> stack{root};
  while (!stack.empty()) {
    const VertexId v = stack.back();
    stack.pop_back();
    for (const auto& [w, label] : tree.neighbors(v)) {
      if (parent.emplace(w, v).second) stack.push_back(w);
    }
  }
  return parent;
}

}  // namespace detail

/// 1 iff the unique x–y path carries an edge labeled 1.
inline EdgeLabel path_label_or(const LabeledTree& tree, std::string_view x,
                               std::string_view y) {
  const VertexId vx = tree.require_leaf(x);
  const VertexId vy = tree.require_leaf(y);
  if (vx == vy) throw Error("path query needs two distinct leaves");
  EdgeLabel out = EdgeLabel::Zero;
  for (EdgeLabel l : detail::path_labels(tree, vx, vy)) out = out | l;
  return out;
}

inline VertexId lca(const LabeledTree& tree, std::string_view x,
                    std::string_view y) {
  const auto root = tree.root();
  if (!root) throw Error("tree is not rooted");
  const VertexId vx = tree.require_leaf(x);
  const VertexId vy = tree.require_leaf(y);
  const auto parent = detail::parent_map(tree, *root);

  std::set<VertexId> ancestors;
  for (VertexId v = vx;; v = parent.at(v)) {
    ancestors.insert(v);
    if (v == *root) break;
  }
  VertexId v = vy;
  while (!ancestors.contains(v)) v = parent.at(v);
  return v;
}

/// Restriction to the leaves named in `keep`: other leaves are deleted,
/// dangling unnamed vertices pruned and degree-2 vertices suppressed. A rooted
/// input stays rooted at the last common ancestor of the kept leaves (subject
/// to the root-moving rule of `suppress_degree2`).
inline LabeledTree restrict_leaves(const LabeledTree& tree,
                                   const std::set<std::string>& keep) {
  require_valid(tree);
  if (keep.empty()) throw Error("restriction to an empty leaf set");
  std::set<VertexId> kept;
  for (const auto& name : keep) kept.insert(tree.require_leaf(name));

  std::optional<VertexId> new_root;
  if (tree.root()) {
    new_root = *kept.begin();
    for (VertexId v : kept) {
      new_root = lca(tree, *tree.leaf_name(*new_root), *tree.leaf_name(v));
    }
  }

  LabeledTree out = tree;
  for (const auto& [v, name] : tree.leaf_name_map()) {
    if (!kept.contains(v)) out.remove_vertex(v);
  }
  bool pruned = true;
  while (pruned) {
    pruned = false;
    for (VertexId v : out.vertices()) {
      if (out.degree(v) <= 1 && !out.leaf_name(v)) {
        out.remove_vertex(v);
        pruned = true;
      }
    }
  }
  out.set_root(new_root);
  return suppress_degree2(out);
}

}  // namespace fitch
