#pragma once

#include <algorithm>
#include <cstdint>
#include <limits>
#include <map>
#include <optional>
#include <set>
#include <sstream>
#include <string>
#include <variant>
#include <vector>

#include "fitch/compute.hpp"
#include "fitch/error.hpp"
#include "fitch/graph.hpp"
#include "fitch/recognition.hpp"
#include "fitch/tree.hpp"

namespace fitch::oracle {

inline constexpr int kMaxTopologyLeaves = 6;
inline constexpr int kMaxRealizableLeaves = 5;

/// "a", "b", "c", ...
inline std::vector<std::string> default_leaf_names(int n) {
  std::vector<std::string> out;
  for (int i = 0; i < n; ++i) out.emplace_back(1, static_cast<char>('a' + i));
  return out;
}

namespace detail {

/// Nontrivial and trivial splits of an unrooted tree, each encoded as the
/// bitmask of the side not containing the first leaf. Determines the
/// topology when no inner vertex has degree 2.
inline std::vector<std::uint32_t> split_key(const LabeledTree& t,
                                            const std::vector<std::string>& names) {
  std::map<VertexId, std::uint32_t> bit;
  for (std::size_t i = 0; i < names.size(); ++i) {
    bit[t.require_leaf(names[i])] = 1u << i;
  }
  const VertexId anchor = t.require_leaf(names.front());
  const auto parent = fitch::detail::parent_map(t, anchor);

  // BFS order from the anchor; reversed, it accumulates leaf masks bottom-up.
  std::vector<VertexId> order{anchor};
  for (std::size_t i = 0; i < order.size(); ++i) {
    for (const auto& [w, label] : t.neighbors(order[i])) {
      if (w != parent.at(order[i])) order.push_back(w);
    }
  }
  std::map<VertexId, std::uint32_t> below;
  for (auto it = order.rbegin(); it != order.rend(); ++it) {
    std::uint32_t m = bit.contains(*it) ? bit.at(*it) : 0;
    for (const auto& [w, label] : t.neighbors(*it)) {
      if (w != parent.at(*it)) m |= below.at(w);
    }
    below[*it] = m;
  }
  std::vector<std::uint32_t> key;
  for (VertexId v : order) {
    if (v != anchor) key.push_back(below.at(v));
  }
  std::sort(key.begin(), key.end());
  return key;
}

}  // namespace detail

/// Every unrooted tree on the given leaves whose inner vertices all have
/// degree >= 3, each exactly once, with all edges labeled 0.
///
/// Built by leaf insertion: leaf i either subdivides an existing edge or
/// attaches to an existing inner vertex. Results are deduplicated by split
/// set, and their order is deterministic.
inline std::vector<LabeledTree> enumerate_trees(const std::vector<std::string>& names) {
  const int n = static_cast<int>(names.size());
  if (n < 2 || n > kMaxTopologyLeaves) {
    throw Error("leaf count " + std::to_string(n) + " outside 2.." +
                std::to_string(kMaxTopologyLeaves));
  }
  {
    std::set<std::string> unique(names.begin(), names.end());
    if (unique.size() != names.size()) throw Error("duplicate leaf name");
  }

  LabeledTree seed;
  const VertexId a = seed.add_leaf(names[0]);
  const VertexId b = seed.add_leaf(names[1]);
  seed.add_edge(a, b, EdgeLabel::Zero);
  std::vector<LabeledTree> level{seed};

  for (int i = 2; i < n; ++i) {
    std::vector<LabeledTree> next;
    std::set<std::vector<std::uint32_t>> seen;
    const std::vector<std::string> prefix(names.begin(), names.begin() + i + 1);
    auto keep = [&](LabeledTree t) {
      if (seen.insert(detail::split_key(t, prefix)).second) {
        next.push_back(std::move(t));
      }
    };
    for (const auto& t : level) {
      for (const auto& [e, label] : t.edges()) {
        LabeledTree u = t;
        u.remove_edge(e);
        const VertexId mid = u.add_vertex();
        u.add_edge(e.lo, mid, EdgeLabel::Zero);
        u.add_edge(mid, e.hi, EdgeLabel::Zero);
        u.add_edge(mid, u.add_leaf(names[i]), EdgeLabel::Zero);
        keep(std::move(u));
      }
      for (VertexId v : t.vertices()) {
        if (t.is_leaf(v)) continue;
        LabeledTree u = t;
        u.add_edge(v, u.add_leaf(names[i]), EdgeLabel::Zero);
        keep(std::move(u));
      }
    }
    level = std::move(next);
  }
  return level;
}

inline std::vector<LabeledTree> enumerate_trees(int n) {
  if (n < 2 || n > kMaxTopologyLeaves) {
    throw Error("leaf count " + std::to_string(n) + " outside 2.." +
                std::to_string(kMaxTopologyLeaves));
  }
  return enumerate_trees(default_leaf_names(n));
}

/// Calls `fn` on `topology` under each of its 2^|E| labelings.
template <typename Fn>
void for_each_labeling(const LabeledTree& topology, Fn&& fn) {
  const auto edges = topology.edges();
  const std::uint64_t count = std::uint64_t{1} << edges.size();
  LabeledTree t = topology;
  for (std::uint64_t mask = 0; mask < count; ++mask) {
    for (std::size_t i = 0; i < edges.size(); ++i) {
      t.set_label(edges[i].first,
                  (mask >> i) & 1 ? EdgeLabel::One : EdgeLabel::Zero);
    }
    fn(static_cast<const LabeledTree&>(t));
  }
}

/// Number of set partitions of an n-element set, from the Stirling
/// numbers of the second kind.
inline std::uint64_t bell_number(int n) {
  if (n < 0 || n > 25) throw Error("Bell number index out of range");
  std::vector<std::vector<std::uint64_t>> s(n + 1, std::vector<std::uint64_t>(n + 1, 0));
  s[0][0] = 1;
  for (int i = 1; i <= n; ++i) {
    for (int k = 1; k <= i; ++k) s[i][k] = k * s[i - 1][k] + s[i - 1][k - 1];
  }
  std::uint64_t total = 0;
  for (int k = 0; k <= n; ++k) total += s[n][k];
  return total;
}

/// All set partitions of `names`, each in canonical form.
inline std::vector<Partition> enumerate_partitions(const std::vector<std::string>& names) {
  std::vector<Partition> out;
  std::vector<Partition::Block> blocks;
  auto rec = [&](auto&& self, std::size_t i) -> void {
    if (i == names.size()) {
      out.emplace_back(blocks);
      return;
    }
    // Indexing, not references: deeper calls may reallocate `blocks`.
    for (std::size_t b = 0; b < blocks.size(); ++b) {
      blocks[b].push_back(names[i]);
      self(self, i + 1);
      blocks[b].pop_back();
    }
    blocks.push_back({names[i]});
    self(self, i + 1);
    blocks.pop_back();
  };
  if (!names.empty()) rec(rec, 0);
  return out;
}

struct EnumerationReport {
  int leaf_count = 0;
  std::size_t topology_count = 0;
  std::size_t labeling_count = 0;
  std::set<SimpleGraph> realizable_graphs;
  std::uint64_t expected_count = 0;
};

/// Fitch graphs of every labeled tree on n leaves "a", "b", ...
inline EnumerationReport realizable_graphs(int n) {
  if (n < 2 || n > kMaxRealizableLeaves) {
    throw Error("leaf count " + std::to_string(n) + " outside 2.." +
                std::to_string(kMaxRealizableLeaves));
  }
  EnumerationReport report;
  report.leaf_count = n;
  report.expected_count = bell_number(n);
  const auto topologies = enumerate_trees(n);
  report.topology_count = topologies.size();
  for (const auto& topology : topologies) {
    for_each_labeling(topology, [&](const LabeledTree& t) {
      ++report.labeling_count;
      report.realizable_graphs.insert(undirected_fitch(t));
    });
  }
  return report;
}

/// Every simple graph on the given vertex names.
inline std::vector<SimpleGraph> all_graphs(const std::vector<std::string>& names) {
  const SimpleGraph empty(names);
  std::vector<std::pair<SimpleGraph::Index, SimpleGraph::Index>> pairs;
  for (SimpleGraph::Index u = 0; u < names.size(); ++u) {
    for (SimpleGraph::Index v = u + 1; v < names.size(); ++v) pairs.emplace_back(u, v);
  }
  if (pairs.size() >= 31) throw Error("too many vertices for graph enumeration");
  std::vector<SimpleGraph> out;
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << pairs.size()); ++mask) {
    SimpleGraph g = empty;
    for (std::size_t i = 0; i < pairs.size(); ++i) {
      if ((mask >> i) & 1) g.add_edge(pairs[i].first, pairs[i].second);
    }
    out.push_back(std::move(g));
  }
  return out;
}

struct CharacterizationResult {
  enum class Failure { None, RealizableButRejected, AcceptedButUnrealizable };

  Failure failure = Failure::None;
  std::optional<SimpleGraph> counterexample;

  bool pass() const { return failure == Failure::None; }
};

/// Compares the realizable graphs on n leaves against the graphs `recognize`
/// accepts, over all 2^(n choose 2) labeled graphs.
inline CharacterizationResult verify_characterization(int n) {
  const auto report = realizable_graphs(n);
  CharacterizationResult result;
  for (const auto& g : all_graphs(default_leaf_names(n))) {
    const bool accepted = std::holds_alternative<Partition>(recognize(g));
    const bool realizable = report.realizable_graphs.contains(g);
    if (accepted == realizable) continue;
    result.failure = realizable
                         ? CharacterizationResult::Failure::RealizableButRejected
                         : CharacterizationResult::Failure::AcceptedButUnrealizable;
    result.counterexample = g;
    return result;
  }
  return result;
}

/// All explaining trees of minimum vertex count, found by exhaustive search.
/// `g` must be complete multipartite with at most kMaxRealizableLeaves
/// vertices.
inline std::vector<LabeledTree> minimum_trees(const SimpleGraph& g) {
  if (g.vertex_count() == 0) throw Error("empty graph");
  if (g.vertex_count() > kMaxRealizableLeaves) {
    throw Error("graph too large for exhaustive search");
  }
  if (!std::holds_alternative<Partition>(recognize(g))) {
    throw Error("graph is not complete multipartite");
  }
  if (g.vertex_count() == 1) {
    LabeledTree t;
    t.add_leaf(g.name(0));
    return {t};
  }
  std::vector<LabeledTree> best;
  std::size_t best_size = std::numeric_limits<std::size_t>::max();
  for (const auto& topology : enumerate_trees(g.names())) {
    if (topology.vertex_count() > best_size) continue;
    for_each_labeling(topology, [&](const LabeledTree& t) {
      if (undirected_fitch(t) != g) return;
      if (t.vertex_count() < best_size) {
        best_size = t.vertex_count();
        best.clear();
      }
      best.push_back(t);
    });
  }
  if (best.empty()) throw Error("no explaining tree found");
  return best;
}

inline std::size_t minimum_tree_size(const SimpleGraph& g) {
  return minimum_trees(g).front().vertex_count();
}

/// "a--b a--c", or "-" for an edgeless graph.
inline std::string edge_summary(const SimpleGraph& g) {
  std::string out;
  for (auto [u, v] : g.edges()) {
    if (!out.empty()) out += ' ';
    out += g.name(u) + "--" + g.name(v);
  }
  return out.empty() ? "-" : out;
}

/// Structured text form of a report plus the characterization verdict.
inline std::string to_text(const EnumerationReport& report,
                           const CharacterizationResult& verdict,
                           bool list_graphs) {
  std::ostringstream os;
  os << "leaf_count: " << report.leaf_count << '\n'
     << "topology_count: " << report.topology_count << '\n'
     << "labeling_count: " << report.labeling_count << '\n'
     << "realizable: " << report.realizable_graphs.size() << '\n'
     << "expected: " << report.expected_count << '\n';
  if (list_graphs) {
    for (const auto& g : report.realizable_graphs) {
      os << "graph: " << edge_summary(g) << '\n';
    }
  }
  const bool pass = verdict.pass() &&
                    report.realizable_graphs.size() == report.expected_count;
  os << "status: " << (pass ? "PASS" : "FAIL") << '\n';
  if (verdict.counterexample) {
    os << "counterexample: " << edge_summary(*verdict.counterexample) << " ("
       << (verdict.failure ==
                   CharacterizationResult::Failure::RealizableButRejected
               ? "realizable but rejected"
               : "accepted but not realizable")
       << ")\n";
  }
  return os.str();
}

}  // namespace fitch::oracle
