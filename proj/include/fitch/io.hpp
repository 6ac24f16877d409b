#pragma once

#include <string_view>

#include "fitch/dot.hpp"
#include "fitch/edgelist.hpp"
#include "fitch/newick.hpp"

namespace fitch {

enum class InputKind { Tree, Graph };

/// Newick and edge-list text differ at the first token: an edge list opens
/// with "vertices:" (after blank or comment lines).
inline InputKind detect_kind(std::string_view text) {
  std::size_t i = 0;
  while (i < text.size()) {
    const char c = text[i];
    if (c == ' ' || c == '\t' || c == '\r' || c == '\n') {
      ++i;
    } else if (c == '#') {
      while (i < text.size() && text[i] != '\n') ++i;
    } else {
      break;
    }
  }
  return text.substr(i).starts_with("vertices:") ? InputKind::Graph
                                                 : InputKind::Tree;
}

}  // namespace fitch
