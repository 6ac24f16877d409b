#pragma once

#include <algorithm>
#include <cstdint>
#include <optional>
#include <set>
#include <string>
#include <unordered_map>
#include <utility>
#include <variant>
#include <vector>

#include "fitch/error.hpp"
#include "fitch/graph.hpp"

namespace fitch {

/// Ordered list of disjoint, non-empty vertex blocks.
///
/// Always held in canonical form: members sorted within each block, blocks
/// ordered by decreasing size and then by smallest member.
class Partition {
 public:
  using Block = std::vector<std::string>;

  Partition() = default;

  explicit Partition(std::vector<Block> blocks) : blocks_(std::move(blocks)) {
    std::set<std::string> seen;
    for (auto& block : blocks_) {
      if (block.empty()) throw Error("empty block in partition");
      std::sort(block.begin(), block.end());
      for (const auto& member : block) {
        if (member.empty()) throw Error("empty vertex name in partition");
        if (!seen.insert(member).second) {
          throw Error("vertex '" + member + "' appears in two blocks");
        }
      }
    }
    std::sort(blocks_.begin(), blocks_.end(), [](const Block& a, const Block& b) {
      if (a.size() != b.size()) return a.size() > b.size();
      return a.front() < b.front();
    });
  }

  const std::vector<Block>& blocks() const { return blocks_; }
  std::size_t block_count() const { return blocks_.size(); }

  std::size_t element_count() const {
    std::size_t n = 0;
    for (const auto& b : blocks_) n += b.size();
    return n;
  }

  std::vector<std::size_t> block_sizes() const {
    std::vector<std::size_t> out;
    for (const auto& b : blocks_) out.push_back(b.size());
    return out;
  }

  std::vector<std::string> elements() const {
    std::vector<std::string> out;
    for (const auto& b : blocks_) out.insert(out.end(), b.begin(), b.end());
    std::sort(out.begin(), out.end());
    return out;
  }

  friend bool operator==(const Partition&, const Partition&) = default;

 private:
  std::vector<Block> blocks_;
};

/// Three vertices inducing K1 ∪ K2: `isolated` is adjacent to neither end of
/// the edge {first, second}. `first < second`.
struct ForbiddenWitness {
  std::string isolated;
  std::string first;
  std::string second;

  friend bool operator==(const ForbiddenWitness&, const ForbiddenWitness&) = default;
};

using Recognition = std::variant<Partition, ForbiddenWitness>;

/// "{a c} {b}"
inline std::string to_string(const Partition& p) {
  std::string out;
  for (const auto& block : p.blocks()) {
    if (!out.empty()) out += ' ';
    out += '{';
    for (std::size_t i = 0; i < block.size(); ++i) {
      if (i) out += ' ';
      out += block[i];
    }
    out += '}';
  }
  return out;
}

/// "a | b--c"
inline std::string to_string(const ForbiddenWitness& w) {
  return w.isolated + " | " + w.first + "--" + w.second;
}

/// The complete multipartite graph whose independent sets are the blocks.
inline SimpleGraph complete_multipartite(const Partition& p) {
  SimpleGraph g(p.elements());
  std::vector<std::vector<SimpleGraph::Index>> members(p.block_count());
  std::vector<std::size_t> block_of(g.vertex_count());
  for (std::size_t b = 0; b < p.block_count(); ++b) {
    for (const auto& m : p.blocks()[b]) {
      const auto i = g.require_index(m);
      block_of[i] = b;
      members[b].push_back(i);
    }
    std::sort(members[b].begin(), members[b].end());
  }
  // Cost is proportional to the edge count, not n^2: one huge block stays cheap.
  std::vector<SimpleGraph::Index> later;
  for (SimpleGraph::Index u = 0; u < g.vertex_count(); ++u) {
    later.clear();
    for (std::size_t b = 0; b < members.size(); ++b) {
      if (b == block_of[u]) continue;
      auto it = std::upper_bound(members[b].begin(), members[b].end(), u);
      later.insert(later.end(), it, members[b].end());
    }
    std::sort(later.begin(), later.end());
    for (auto v : later) g.add_edge(u, v);
  }
  return g;
}

/// True iff the triple really induces K1 ∪ K2 in `g`.
inline bool is_valid_witness(const SimpleGraph& g, const ForbiddenWitness& w) {
  const auto i = g.index_of(w.isolated);
  const auto a = g.index_of(w.first);
  const auto b = g.index_of(w.second);
  if (!i || !a || !b || *i == *a || *i == *b || *a == *b) return false;
  return g.has_edge(*a, *b) && !g.has_edge(*i, *a) && !g.has_edge(*i, *b);
}

/// True iff within-block pairs are non-edges and cross-block pairs are edges.
inline bool is_multipartite_partition(const SimpleGraph& g, const Partition& p) {
  if (p.elements() != g.names()) return false;
  std::vector<std::size_t> block_of(g.vertex_count());
  for (std::size_t b = 0; b < p.block_count(); ++b) {
    for (const auto& m : p.blocks()[b]) block_of[g.require_index(m)] = b;
  }
  for (SimpleGraph::Index u = 0; u < g.vertex_count(); ++u) {
    for (SimpleGraph::Index v = u + 1; v < g.vertex_count(); ++v) {
      if (g.has_edge(u, v) == (block_of[u] == block_of[v])) return false;
    }
  }
  return true;
}

namespace detail {

inline std::uint64_t mix64(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

inline std::uint64_t neighborhood_hash(const std::vector<std::uint32_t>& nbrs) {
  std::uint64_t h = mix64(nbrs.size());
  for (std::uint32_t v : nbrs) h = mix64(h ^ v);
  return h;
}

inline Partition partition_from_classes(
    const SimpleGraph& g, const std::vector<std::vector<SimpleGraph::Index>>& classes) {
  std::vector<Partition::Block> blocks;
  blocks.reserve(classes.size());
  for (const auto& cls : classes) {
    Partition::Block block;
    block.reserve(cls.size());
    for (auto v : cls) block.push_back(g.name(v));
    blocks.push_back(std::move(block));
  }
  return Partition(std::move(blocks));
}

/// Smallest (isolated, first, second) triple inducing K1 ∪ K2, ordered by
/// vertex name. O(n + m) per isolated-vertex candidate.
inline std::optional<ForbiddenWitness> smallest_witness(const SimpleGraph& g) {
  const auto n = static_cast<SimpleGraph::Index>(g.vertex_count());
  std::vector<char> adjacent(n, 0);
  for (SimpleGraph::Index u = 0; u < n; ++u) {
    for (auto w : g.neighbors(u)) adjacent[w] = 1;
    std::optional<ForbiddenWitness> found;
    for (SimpleGraph::Index x = 0; x < n && !found; ++x) {
      if (x == u || adjacent[x]) continue;
      for (auto y : g.neighbors(x)) {
        if (y > x && !adjacent[y]) {
          found = ForbiddenWitness{g.name(u), g.name(x), g.name(y)};
          break;
        }
      }
    }
    for (auto w : g.neighbors(u)) adjacent[w] = 0;
    if (found) return found;
  }
  return std::nullopt;
}

}  // namespace detail

/// Decides whether `g` is complete multipartite.
///
/// Vertices are grouped by neighbourhood (hashed, then compared exactly).
/// Equal-neighbourhood classes are independent sets, and `g` is complete
/// multipartite iff every vertex is adjacent to everything outside its class,
/// i.e. deg(v) = n - |class(v)|. Acceptance costs O(n + m) expected time; on
/// rejection the lexicographically smallest K1 ∪ K2 triple is returned.
inline Recognition recognize(const SimpleGraph& g) {
  if (g.vertex_count() == 0) throw Error("empty graph");
  const auto n = static_cast<SimpleGraph::Index>(g.vertex_count());

  std::unordered_map<std::uint64_t, std::vector<std::size_t>> buckets;
  std::vector<std::vector<SimpleGraph::Index>> classes;
  std::vector<std::size_t> class_of(n);
  for (SimpleGraph::Index v = 0; v < n; ++v) {
    auto& bucket = buckets[detail::neighborhood_hash(g.neighbors(v))];
    std::optional<std::size_t> match;
    for (std::size_t c : bucket) {
      if (g.neighbors(classes[c].front()) == g.neighbors(v)) {
        match = c;
        break;
      }
    }
    if (!match) {
      match = classes.size();
      classes.emplace_back();
      bucket.push_back(*match);
    }
    classes[*match].push_back(v);
    class_of[v] = *match;
  }

  for (SimpleGraph::Index v = 0; v < n; ++v) {
    if (g.degree(v) + classes[class_of[v]].size() != n) {
      if (auto w = detail::smallest_witness(g)) return *w;
      throw Error("internal error: rejected graph without K1+K2 witness");
    }
  }
  return detail::partition_from_classes(g, classes);
}

/// Reference implementation: scans all vertex triples for an induced K1 ∪ K2
/// and otherwise reads the blocks off the connected components of the
/// complement. O(n^3) time, O(n^2) space.
inline Recognition recognize_bruteforce(const SimpleGraph& g) {
  if (g.vertex_count() == 0) throw Error("empty graph");
  const auto n = static_cast<SimpleGraph::Index>(g.vertex_count());
  std::vector<char> adj(static_cast<std::size_t>(n) * n, 0);
  for (auto [u, v] : g.edges()) {
    adj[static_cast<std::size_t>(u) * n + v] = 1;
    adj[static_cast<std::size_t>(v) * n + u] = 1;
  }
  auto edge = [&](SimpleGraph::Index a, SimpleGraph::Index b) {
    return adj[static_cast<std::size_t>(a) * n + b] != 0;
  };

  for (SimpleGraph::Index u = 0; u < n; ++u) {
    for (SimpleGraph::Index x = 0; x < n; ++x) {
      if (x == u || edge(u, x)) continue;
      for (SimpleGraph::Index y = x + 1; y < n; ++y) {
        if (y != u && edge(x, y) && !edge(u, y)) {
          return ForbiddenWitness{g.name(u), g.name(x), g.name(y)};
        }
      }
    }
  }

  std::vector<std::vector<SimpleGraph::Index>> classes;
  std::vector<char> assigned(n, 0);
  for (SimpleGraph::Index u = 0; u < n; ++u) {
    if (assigned[u]) continue;
    std::vector<SimpleGraph::Index> cls;
    std::vector<SimpleGraph::Index> stack{u};
    assigned[u] = 1;
    while (!stack.empty()) {
      const auto v = stack.back();
      stack.pop_back();
      cls.push_back(v);
      for (SimpleGraph::Index w = 0; w < n; ++w) {
        if (!assigned[w] && w != v && !edge(v, w)) {
          assigned[w] = 1;
          stack.push_back(w);
        }
      }
    }
    classes.push_back(std::move(cls));
  }
  return detail::partition_from_classes(g, classes);
}

}  // namespace fitch
