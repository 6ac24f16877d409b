#include <random>
#include <set>
#include <string>

#include <gtest/gtest.h>

#include "fitch/tree.hpp"
#include "test_support.hpp"

namespace fitch {
namespace {

using testing::L;
using testing::star;

// T[2,1]: root 0 -> c1 (1) -> a, b (0); root -> c (1).
LabeledTree t21() {
  LabeledTree t;
  const VertexId r = t.add_vertex();
  const VertexId c1 = t.add_vertex();
  t.add_edge(r, c1, EdgeLabel::One);
  t.add_edge(c1, t.add_leaf("a"), EdgeLabel::Zero);
  t.add_edge(c1, t.add_leaf("b"), EdgeLabel::Zero);
  t.add_edge(r, t.add_leaf("c"), EdgeLabel::One);
  t.set_root(r);
  return t;
}

TEST(Validate, SingleEdgeIsValid) {
  LabeledTree t;
  t.add_edge(t.add_leaf("a"), t.add_leaf("b"), EdgeLabel::Zero);
  EXPECT_EQ(validate(t), std::nullopt);
}

TEST(Validate, TwoDisjointEdgesAreNotConnected) {
  LabeledTree t;
  t.add_edge(t.add_leaf("a"), t.add_leaf("b"), EdgeLabel::Zero);
  t.add_edge(t.add_leaf("c"), t.add_leaf("d"), EdgeLabel::One);
  EXPECT_EQ(validate(t), "not connected");
}

TEST(Validate, DuplicateLeafName) {
  auto t = star({"x", "x", "y"}, {0, 0, 0});
  auto v = validate(t);
  ASSERT_TRUE(v);
  EXPECT_NE(v->find("duplicate leaf name"), std::string::npos);
}

TEST(Validate, OtherViolations) {
  EXPECT_EQ(validate(LabeledTree{}), "empty tree");

  LabeledTree cycle;
  const VertexId a = cycle.add_vertex();
  const VertexId b = cycle.add_vertex();
  const VertexId c = cycle.add_vertex();
  cycle.add_edge(a, b, EdgeLabel::Zero);
  cycle.add_edge(b, c, EdgeLabel::Zero);
  cycle.add_edge(c, a, EdgeLabel::Zero);
  EXPECT_EQ(validate(cycle), "contains a cycle");

  LabeledTree unnamed;
  unnamed.add_edge(unnamed.add_leaf("a"), unnamed.add_vertex(), EdgeLabel::Zero);
  EXPECT_NE(validate(unnamed)->find("unnamed leaf"), std::string::npos);

  auto inner = star({"a", "b", "c"}, {0, 0, 0});
  inner.set_leaf_name(0, "centre");
  EXPECT_NE(validate(inner)->find("inner vertex"), std::string::npos);

  LabeledTree single;
  single.add_leaf("a");
  EXPECT_EQ(validate(single), std::nullopt);
}

TEST(SuppressDegree2, OneAndZeroGivesOne) {
  LabeledTree t;
  const VertexId a = t.add_leaf("a");
  const VertexId v = t.add_vertex();
  const VertexId b = t.add_leaf("b");
  t.add_edge(a, v, EdgeLabel::Zero);
  t.add_edge(v, b, EdgeLabel::One);
  const auto s = suppress_degree2(t);
  EXPECT_EQ(s.vertex_count(), 2u);
  EXPECT_EQ(s.label(EdgeRef(a, b)), EdgeLabel::One);
}

TEST(SuppressDegree2, ZeroAndZeroGivesZero) {
  LabeledTree t;
  const VertexId a = t.add_leaf("a");
  const VertexId v = t.add_vertex();
  const VertexId b = t.add_leaf("b");
  t.add_edge(a, v, EdgeLabel::Zero);
  t.add_edge(v, b, EdgeLabel::Zero);
  const auto s = suppress_degree2(t);
  EXPECT_EQ(s.edge_count(), 1u);
  EXPECT_EQ(s.label(EdgeRef(a, b)), EdgeLabel::Zero);
}

TEST(SuppressDegree2, StarIsUnchanged) {
  const auto t = star({"a", "b", "c", "d"}, {0, 1, 0, 1});
  EXPECT_EQ(suppress_degree2(t), t);
}

TEST(SuppressDegree2, WholeChainCollapses) {
  // a -0- u -0- v -1- w -0- centre(b, c)
  LabeledTree t;
  const VertexId a = t.add_leaf("a");
  const VertexId u = t.add_vertex();
  const VertexId v = t.add_vertex();
  const VertexId w = t.add_vertex();
  const VertexId centre = t.add_vertex();
  t.add_edge(a, u, EdgeLabel::Zero);
  t.add_edge(u, v, EdgeLabel::Zero);
  t.add_edge(v, w, EdgeLabel::One);
  t.add_edge(w, centre, EdgeLabel::Zero);
  t.add_edge(centre, t.add_leaf("b"), EdgeLabel::Zero);
  t.add_edge(centre, t.add_leaf("c"), EdgeLabel::Zero);
  t.set_root(v);
  const auto s = suppress_degree2(t);
  EXPECT_EQ(s.vertex_count(), 4u);
  EXPECT_EQ(s.label(EdgeRef(a, centre)), EdgeLabel::One);
  // The suppressed root moves to the inner end of its chain.
  EXPECT_EQ(s.root(), centre);
}

TEST(SuppressDegree2, NamedDegree2VertexIsRejected) {
  LabeledTree t;
  const VertexId a = t.add_leaf("a");
  const VertexId v = t.add_leaf("v");
  t.add_edge(a, v, EdgeLabel::Zero);
  t.add_edge(v, t.add_leaf("b"), EdgeLabel::Zero);
  try {
    suppress_degree2(t);
    FAIL();
  } catch (const Error& e) {
    EXPECT_NE(std::string(e.what()).find("cannot suppress leaf"), std::string::npos);
  }
}

TEST(Reroot, MovesOnlyTheRoot) {
  const auto t = t21();
  const auto r = reroot(t, 1);
  EXPECT_EQ(r.root(), 1u);
  EXPECT_EQ(r.edges(), t.edges());
  EXPECT_EQ(r.leaf_name_map(), t.leaf_name_map());
  EXPECT_EQ(reroot(t, 0), t);
}

TEST(Reroot, Errors) {
  const auto s3 = star({"a", "b", "c"}, {0, 0, 0});
  EXPECT_THROW(reroot(s3, s3.require_leaf("a")), Error);
  EXPECT_THROW(reroot(s3, 99), Error);

  LabeledTree edge;
  const VertexId a = edge.add_leaf("a");
  edge.add_edge(a, edge.add_leaf("b"), EdgeLabel::One);
  EXPECT_EQ(reroot(edge, a).root(), a);
}

TEST(ContractEdge, RootEdgeOfT21) {
  const auto t = t21();
  const auto c = contract_edge(t, EdgeRef(0, 1));
  EXPECT_EQ(c.vertex_count(), 4u);
  EXPECT_EQ(c.edge_count(), 3u);
  EXPECT_EQ(c.root(), 0u);
  EXPECT_EQ(c.label(EdgeRef(0, c.require_leaf("a"))), EdgeLabel::Zero);
  EXPECT_EQ(c.label(EdgeRef(0, c.require_leaf("b"))), EdgeLabel::Zero);
  EXPECT_EQ(c.label(EdgeRef(0, c.require_leaf("c"))), EdgeLabel::One);
  // Brute-force path check: still K_{2,1} with independent set {a, b}.
  const auto g = testing::brute_undirected_fitch(c);
  EXPECT_EQ(g, testing::graph_from({"a", "b", "c"}, {{"a", "c"}, {"b", "c"}}));
}

TEST(ContractEdge, CherryPairBecomesStar) {
  LabeledTree t;
  const VertexId u = t.add_vertex();
  const VertexId v = t.add_vertex();
  t.add_edge(u, v, EdgeLabel::One);
  t.add_edge(u, t.add_leaf("a"), EdgeLabel::Zero);
  t.add_edge(u, t.add_leaf("b"), EdgeLabel::One);
  t.add_edge(v, t.add_leaf("c"), EdgeLabel::Zero);
  t.add_edge(v, t.add_leaf("d"), EdgeLabel::One);
  const auto s = contract_edge(t, EdgeRef(u, v));
  EXPECT_EQ(s.vertex_count(), 5u);
  EXPECT_EQ(s.degree(u), 4u);
  EXPECT_FALSE(s.contains(v));
  EXPECT_EQ(s.label(EdgeRef(u, s.require_leaf("d"))), EdgeLabel::One);
  EXPECT_EQ(validate(s), std::nullopt);
}

TEST(ContractEdge, LeafEdgeIsRejected) {
  const auto t = t21();
  try {
    contract_edge(t, EdgeRef(0, t.require_leaf("c")));
    FAIL();
  } catch (const Error& e) {
    EXPECT_NE(std::string(e.what()).find("cannot contract leaf edge"), std::string::npos);
  }
  EXPECT_THROW(contract_edge(t, EdgeRef(0, t.require_leaf("a"))), Error);
}

TEST(PathLabelOr, StarExamples) {
  EXPECT_EQ(path_label_or(star({"a", "b", "c"}, {0, 0, 0}), "a", "b"), EdgeLabel::Zero);
  const auto one = star({"a", "b", "c"}, {1, 0, 0});
  EXPECT_EQ(path_label_or(one, "a", "b"), EdgeLabel::One);
  EXPECT_EQ(path_label_or(one, "b", "c"), EdgeLabel::Zero);
}

TEST(PathLabelOr, Errors) {
  const auto t = star({"a", "b", "c"}, {1, 0, 0});
  EXPECT_THROW(path_label_or(t, "a", "z"), Error);
  EXPECT_THROW(path_label_or(t, "a", "a"), Error);
}

TEST(Lca, Examples) {
  const auto t11 = star({"a", "b"}, {1, 1});
  EXPECT_EQ(lca(t11, "a", "b"), 0u);
  EXPECT_EQ(lca(t11, "a", "a"), t11.require_leaf("a"));
  EXPECT_EQ(lca(t21(), "a", "b"), 1u);
  EXPECT_EQ(lca(t21(), "a", "c"), 0u);
}

TEST(Lca, Errors) {
  auto t = t21();
  EXPECT_THROW(lca(t, "a", "q"), Error);
  t.set_root(std::nullopt);
  EXPECT_THROW(lca(t, "a", "b"), Error);
}

TEST(RestrictLeaves, DropsLeavesAndSuppresses) {
  const auto t = t21();
  const auto r = restrict_leaves(t, {"a", "c"});
  EXPECT_EQ(r.leaf_names(), (std::vector<std::string>{"a", "c"}));
  EXPECT_EQ(r.vertex_count(), 2u);
  EXPECT_EQ(path_label_or(r, "a", "c"), EdgeLabel::One);
  const auto single = restrict_leaves(t, {"b"});
  EXPECT_EQ(single.vertex_count(), 1u);
  EXPECT_EQ(validate(single), std::nullopt);
}

// Property sweeps over random trees (which include degree-2 inner vertices).

class RandomTrees : public ::testing::Test {
 protected:
  std::vector<LabeledTree> trees() {
    std::mt19937_64 rng(0x5eed);
    std::uniform_int_distribution<int> size(2, 14);
    std::vector<LabeledTree> out;
    for (int i = 0; i < 150; ++i) out.push_back(testing::random_tree(rng, size(rng), true));
    return out;
  }

  static void expect_same_path_ors(const LabeledTree& a, const LabeledTree& b) {
    const auto names = a.leaf_names();
    ASSERT_EQ(names, b.leaf_names());
    for (const auto& x : names) {
      for (const auto& y : names) {
        if (x != y) {
          EXPECT_EQ(path_label_or(a, x, y), path_label_or(b, x, y));
        }
      }
    }
  }
};

TEST_F(RandomTrees, PathLabelOrIsSymmetric) {
  for (const auto& t : trees()) {
    ASSERT_EQ(validate(t), std::nullopt);
    for (const auto& x : t.leaf_names()) {
      for (const auto& y : t.leaf_names()) {
        if (x != y) {
          EXPECT_EQ(path_label_or(t, x, y), path_label_or(t, y, x));
        }
      }
    }
  }
}

TEST_F(RandomTrees, SuppressIsIdempotentAndPreservesPaths) {
  for (const auto& t : trees()) {
    const auto s = suppress_degree2(t);
    EXPECT_EQ(validate(s), std::nullopt);
    for (VertexId v : s.vertices()) {
      if (!s.is_leaf(v)) {
        EXPECT_NE(s.degree(v), 2u);
      }
    }
    EXPECT_EQ(suppress_degree2(s), s);
    expect_same_path_ors(t, s);
  }
}

TEST_F(RandomTrees, RerootPreservesPaths) {
  for (const auto& t : trees()) {
    for (VertexId v : t.vertices()) {
      if (t.is_leaf(v) && t.vertex_count() >= 3) continue;
      expect_same_path_ors(t, reroot(t, v));
    }
  }
}

TEST_F(RandomTrees, ContractKeepsLeafSet) {
  for (const auto& t : trees()) {
    for (const auto& [e, label] : t.edges()) {
      if (t.is_leaf(e.lo) || t.is_leaf(e.hi)) continue;
      const auto c = contract_edge(t, e);
      EXPECT_EQ(c.leaf_names(), t.leaf_names());
      EXPECT_EQ(c.vertex_count() + 1, t.vertex_count());
      EXPECT_EQ(validate(c), std::nullopt);
    }
  }
}

TEST_F(RandomTrees, PathSplitsAtLca) {
  for (const auto& t : trees()) {
    for (const auto& x : t.leaf_names()) {
      for (const auto& y : t.leaf_names()) {
        if (x == y) continue;
        const VertexId top = lca(t, x, y);
        const bool up = testing::any_one(testing::brute_path(t, top, t.require_leaf(x)));
        const bool down = testing::any_one(testing::brute_path(t, top, t.require_leaf(y)));
        EXPECT_EQ(path_label_or(t, x, y), L(up || down));
      }
    }
  }
}

}  // namespace
}  // namespace fitch
