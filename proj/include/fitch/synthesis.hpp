#pragma once

#include <string>
#include <variant>

#include "fitch/compute.hpp"
#include "fitch/error.hpp"
#include "fitch/graph.hpp"
#include "fitch/recognition.hpp"
#include "fitch/tree.hpp"

namespace fitch {

enum class TreeMode { Canonical, Minimal };

/// The tree T[n1,...,nk] with labeling λ*, rooted at r (vertex 0, inner name
/// "r").
///
/// One block: the star on its members, all edges 0 (a single block of one
/// vertex gives the one-vertex tree). Several blocks: the root gets one child
/// per block in canonical order over a 1-edge; a singleton block's child is
/// its leaf, a larger block's child is an inner vertex holding the members on
/// 0-edges.
inline LabeledTree canonical_tree(const Partition& p) {
  if (p.block_count() == 0) throw Error("partition has no blocks");
  LabeledTree t;
  const auto& blocks = p.blocks();

  if (p.block_count() == 1 && blocks.front().size() == 1) {
    const VertexId only = t.add_leaf(blocks.front().front());
    t.set_root(only);
    return t;
  }

  const VertexId root = t.add_vertex();
  t.set_inner_name(root, "r");
  t.set_root(root);

  if (p.block_count() == 1) {
    for (const auto& name : blocks.front()) {
      t.add_edge(root, t.add_leaf(name), EdgeLabel::Zero);
    }
    return t;
  }

  for (const auto& block : blocks) {
    if (block.size() == 1) {
      t.add_edge(root, t.add_leaf(block.front()), EdgeLabel::One);
      continue;
    }
    const VertexId child = t.add_vertex();
    t.add_edge(root, child, EdgeLabel::One);
    for (const auto& name : block) {
      t.add_edge(child, t.add_leaf(name), EdgeLabel::Zero);
    }
  }
  return t;
}

/// Vertex count of `canonical_tree(p)`.
inline std::size_t canonical_vertex_count(const Partition& p) {
  const std::size_t n = p.element_count();
  if (p.block_count() == 1) return n == 1 ? 1 : n + 1;
  std::size_t inner = 0;
  for (std::size_t size : p.block_sizes()) inner += size >= 2 ? 1 : 0;
  return 1 + inner + n;
}

/// A smallest tree explaining the complete multipartite graph of `p`.
///
/// Starting from `canonical_tree(p)`: with two vertices in total the
/// degree-2 centre is suppressed, leaving one edge. Otherwise, if some block
/// has two or more members and there are at least two blocks, the 1-edge from
/// the root to the first block's inner child is contracted. Any other
/// canonical tree is a star and is returned as is.
inline LabeledTree minimal_tree(const Partition& p) {
  LabeledTree t = canonical_tree(p);
  if (p.element_count() == 2) return suppress_degree2(t);
  if (p.block_count() >= 2 && p.blocks().front().size() >= 2) {
    // Ids follow construction order: root 0, first block's child 1.
    return contract_edge(t, EdgeRef(0, 1));
  }
  return t;
}

inline bool explains(const LabeledTree& tree, const SimpleGraph& g) {
  return undirected_fitch(tree) == g;
}

/// True iff contracting any inner edge changes the explained graph.
inline bool is_least_resolved(const LabeledTree& tree, const SimpleGraph& g) {
  if (!explains(tree, g)) throw Error("tree does not explain graph");
  for (const auto& [e, label] : tree.edges()) {
    if (tree.is_leaf(e.lo) || tree.is_leaf(e.hi)) continue;
    if (undirected_fitch(contract_edge(tree, e)) == g) return false;
  }
  return true;
}

/// Explaining tree for `g`, or the K1 ∪ K2 witness that none exists.
inline std::variant<LabeledTree, ForbiddenWitness> explain(const SimpleGraph& g,
                                                           TreeMode mode) {
  auto verdict = recognize(g);
  if (auto* w = std::get_if<ForbiddenWitness>(&verdict)) return *w;
  const auto& p = std::get<Partition>(verdict);
  return mode == TreeMode::Minimal ? minimal_tree(p) : canonical_tree(p);
}

}  // namespace fitch
