#pragma once

#include <algorithm>
#include <set>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "fitch/error.hpp"
#include "fitch/graph.hpp"

namespace fitch {

namespace detail {

struct Token {
  std::string_view text;
  std::size_t offset;
};

/// Whitespace-separated tokens of one line, stopping at '#'.
inline std::vector<Token> tokenize_line(std::string_view line, std::size_t base) {
  std::vector<Token> out;
  std::size_t i = 0;
  while (i < line.size()) {
    const char c = line[i];
    if (c == '#') break;
    if (c == ' ' || c == '\t' || c == '\r') {
      ++i;
      continue;
    }
    const std::size_t start = i;
    while (i < line.size() && line[i] != ' ' && line[i] != '\t' &&
           line[i] != '\r' && line[i] != '#') {
      ++i;
    }
    out.push_back({line.substr(start, i - start), base + start});
  }
  return out;
}

inline bool is_edgelist_name(std::string_view s) {
  return !s.empty() && std::none_of(s.begin(), s.end(), [](char c) {
    return c == ' ' || c == '\t' || c == '\r' || c == '\n' || c == '#';
  });
}

inline constexpr std::string_view kVertexHeader = "vertices:";

}  // namespace detail

/// Parses the edge-list format:
///
///     vertices: a b c
///     a b
///     b c      # comments run to end of line
///
/// Throws ParseError naming the offending token's offset.
inline SimpleGraph parse_edgelist(std::string_view text) {
  std::vector<std::vector<detail::Token>> lines;
  std::size_t base = 0;
  while (base <= text.size()) {
    std::size_t end = text.find('\n', base);
    if (end == std::string_view::npos) end = text.size();
    auto tokens = detail::tokenize_line(text.substr(base, end - base), base);
    if (!tokens.empty()) lines.push_back(std::move(tokens));
    base = end + 1;
  }

  if (lines.empty()) throw ParseError(0, "missing 'vertices:' header");
  auto& header = lines.front();
  if (!header.front().text.starts_with(detail::kVertexHeader)) {
    throw ParseError(header.front().offset, "missing 'vertices:' header");
  }
  std::vector<detail::Token> vertex_tokens;
  if (header.front().text.size() > detail::kVertexHeader.size()) {
    const auto rest = header.front().text.substr(detail::kVertexHeader.size());
    vertex_tokens.push_back({rest, header.front().offset + detail::kVertexHeader.size()});
  }
  vertex_tokens.insert(vertex_tokens.end(), header.begin() + 1, header.end());

  std::vector<std::string> names;
  std::set<std::string_view> seen;
  for (const auto& t : vertex_tokens) {
    if (!seen.insert(t.text).second) {
      throw ParseError(t.offset, "duplicate vertex '" + std::string(t.text) + "'");
    }
    names.emplace_back(t.text);
  }
  SimpleGraph g(std::move(names));

  for (std::size_t i = 1; i < lines.size(); ++i) {
    const auto& tokens = lines[i];
    if (tokens.size() != 2) {
      throw ParseError(tokens.front().offset, "expected two vertex names per edge line");
    }
    SimpleGraph::Index ends[2];
    for (int k = 0; k < 2; ++k) {
      auto idx = g.index_of(tokens[k].text);
      if (!idx) {
        throw ParseError(tokens[k].offset,
                         "unknown vertex '" + std::string(tokens[k].text) + "'");
      }
      ends[k] = *idx;
    }
    if (ends[0] == ends[1]) {
      throw ParseError(tokens[1].offset,
                       "self-loop on '" + std::string(tokens[0].text) + "'");
    }
    if (g.has_edge(ends[0], ends[1])) {
      throw ParseError(tokens.front().offset,
                       "duplicate edge {" + std::string(tokens[0].text) + "," +
                           std::string(tokens[1].text) + "}");
    }
    g.add_edge(ends[0], ends[1]);
  }
  return g;
}

namespace detail {

inline std::string vertex_header(const std::vector<std::string>& names) {
  std::string out(kVertexHeader);
  for (const auto& n : names) {
    if (!is_edgelist_name(n)) {
      throw Error("vertex name '" + n + "' cannot be written as an edge list");
    }
    out += ' ';
    out += n;
  }
  out += '\n';
  return out;
}

}  // namespace detail

/// Canonical edge-list text: vertices sorted, one "u v" line per edge with
/// u < v, edges sorted.
inline std::string serialize_edgelist(const SimpleGraph& g) {
  std::string out = detail::vertex_header(g.names());
  for (auto [u, v] : g.edges()) out += g.name(u) + ' ' + g.name(v) + '\n';
  return out;
}

/// Like `serialize_edgelist`, with one "x -> y" line per arc.
inline std::string serialize_arclist(const DirectedGraph& d) {
  std::string out = detail::vertex_header(d.names());
  for (auto [u, v] : d.arcs()) out += d.name(u) + " -> " + d.name(v) + '\n';
  return out;
}

}  // namespace fitch
