#pragma once

#include <algorithm>
#include <map>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "fitch/error.hpp"
#include "fitch/tree.hpp"

namespace fitch {

namespace detail {

inline bool is_newick_space(char c) {
  return c == ' ' || c == '\t' || c == '\n' || c == '\r';
}

inline bool is_newick_reserved(char c) {
  return c == '(' || c == ')' || c == ',' || c == ':' || c == ';' ||
         is_newick_space(c);
}

inline bool is_newick_name(std::string_view s) {
  return !s.empty() && std::none_of(s.begin(), s.end(), is_newick_reserved);
}

class NewickParser {
 public:
  explicit NewickParser(std::string_view text) : text_(text) {}

  LabeledTree parse() {
    skip_space();
    if (at_end()) fail("empty input");
    const VertexId root = parse_node(/*is_root=*/true, 0);
    tree_.set_root(root);
    skip_space();
    if (!at_end() && peek() == ':') fail("root cannot carry an edge label");
    expect(';');
    skip_space();
    if (!at_end()) fail("unexpected text after ';'");
    if (auto violation = validate(tree_)) throw ParseError(pos_, *violation);
    return std::move(tree_);
  }

 private:
  static constexpr int kMaxDepth = 4096;

  VertexId parse_node(bool is_root, int depth) {
    if (depth > kMaxDepth) fail("nesting too deep");
    skip_space();
    if (at_end()) fail("unexpected end of input");

    if (peek() != '(') {
      const std::size_t at = pos_;
      const std::string name = read_name();
      if (name.empty()) fail("expected leaf name or '('");
      return add_named_leaf(name, at);
    }

    ++pos_;
    const VertexId v = tree_.add_vertex();
    std::size_t children = 0;
    while (true) {
      const VertexId child = parse_node(false, depth + 1);
      tree_.add_edge(v, child, parse_label());
      ++children;
      skip_space();
      if (at_end()) fail("unexpected end of input");
      if (peek() == ',') {
        ++pos_;
        continue;
      }
      if (peek() == ')') {
        ++pos_;
        break;
      }
      fail(std::string("expected ',' or ')' but found '") + peek() + "'");
    }

    skip_space();
    const std::size_t at = pos_;
    const std::string name = read_name();
    if (is_root && children == 1) {
      // The root hangs off a single edge: it is itself a leaf.
      if (name.empty()) fail("root with a single child must be named");
      register_leaf_name(name, at);
      tree_.set_leaf_name(v, name);
    } else if (!name.empty()) {
      tree_.set_inner_name(v, name);
    }
    return v;
  }

  EdgeLabel parse_label() {
    skip_space();
    if (at_end() || peek() != ':') fail("missing edge label");
    ++pos_;
    skip_space();
    const std::size_t at = pos_;
    const std::string token = read_name();
    if (token == "0") return EdgeLabel::Zero;
    if (token == "1") return EdgeLabel::One;
    pos_ = at;
    if (token.empty()) fail("missing edge label");
    fail("edge label must be 0 or 1");
  }

  VertexId add_named_leaf(const std::string& name, std::size_t at) {
    register_leaf_name(name, at);
    return tree_.add_leaf(name);
  }

  void register_leaf_name(const std::string& name, std::size_t at) {
    if (!leaf_names_.emplace(name, at).second) {
      throw ParseError(at, "duplicate leaf name '" + name + "'");
    }
  }

  std::string read_name() {
    const std::size_t start = pos_;
    while (!at_end() && !is_newick_reserved(peek())) ++pos_;
    return std::string(text_.substr(start, pos_ - start));
  }

  void expect(char c) {
    skip_space();
    if (at_end()) fail(std::string("expected '") + c + "' at end of input");
    if (peek() != c) {
      fail(std::string("expected '") + c + "' but found '" + peek() + "'");
    }
    ++pos_;
  }

  void skip_space() {
    while (!at_end() && is_newick_space(peek())) ++pos_;
  }

  bool at_end() const { return pos_ >= text_.size(); }
  char peek() const { return text_[pos_]; }

  [[noreturn]] void fail(const std::string& reason) const {
    throw ParseError(pos_, reason);
  }

  std::string_view text_;
  std::size_t pos_ = 0;
  LabeledTree tree_;
  std::map<std::string, std::size_t> leaf_names_;
};

}  // namespace detail

/// Parses Newick text in which every non-root subtree carries ":0" or ":1"
/// as its edge label. The outermost node becomes the root; if it has a single
/// child it is a leaf and must be named. Throws ParseError.
inline LabeledTree parse_newick(std::string_view text) {
  return detail::NewickParser(text).parse();
}

/// Canonical Newick text of a rooted tree: children ordered by their
/// smallest descendant leaf name; inner names omitted except at the root.
inline std::string serialize_newick(const LabeledTree& tree) {
  require_valid(tree);
  const auto root = tree.root();
  if (!root) throw Error("Newick output requires a rooted tree");
  for (const auto& [v, name] : tree.leaf_name_map()) {
    if (!detail::is_newick_name(name)) {
      throw Error("leaf name '" + name + "' cannot be written as Newick");
    }
  }

  // Smallest leaf name in the subtree of every vertex.
  std::map<VertexId, std::string> smallest;
  auto fill = [&](auto&& self, VertexId v, VertexId parent) -> const std::string& {
    std::string best;
    if (auto n = tree.leaf_name(v)) best = std::string(*n);
    for (const auto& [w, label] : tree.neighbors(v)) {
      if (w == parent) continue;
      const std::string& s = self(self, w, v);
      if (best.empty() || s < best) best = s;
    }
    return smallest[v] = std::move(best);
  };
  fill(fill, *root, *root);

  std::string out;
  auto write = [&](auto&& self, VertexId v, VertexId parent) -> void {
    std::vector<std::pair<std::string, VertexId>> children;
    for (const auto& [w, label] : tree.neighbors(v)) {
      if (w != parent) children.emplace_back(smallest.at(w), w);
    }
    std::sort(children.begin(), children.end());
    if (!children.empty()) {
      out += '(';
      for (std::size_t i = 0; i < children.size(); ++i) {
        if (i) out += ',';
        const VertexId w = children[i].second;
        self(self, w, v);
        out += ':';
        out += to_char(*tree.label(EdgeRef(v, w)));
      }
      out += ')';
    }
    if (auto n = tree.leaf_name(v)) {
      out += *n;
    } else if (v == *root) {
      if (auto inner = tree.inner_name(v); inner && detail::is_newick_name(*inner)) {
        out += *inner;
      }
    }
  };
  write(write, *root, *root);
  out += ';';
  return out;
}

}  // namespace fitch
