#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "treecount/tree.hpp"

namespace treecount {

/// Undirected simple graph as read from graph6, before any tree check.
struct SimpleGraph {
  int n = 0;
  std::vector<Edge> edges;

  bool is_tree() const;
  /// Throws ParseError when the graph is not a tree.
  Tree to_tree() const;
};

/// Short-form graph6 only (n <= 62). Throws ParseError on malformed input.
SimpleGraph parse_graph6(std::string_view text);

/// parse_graph6 followed by the tree check.
Tree parse_graph6_tree(std::string_view text);

/// Bit-exact graph6 encoding; throws DomainError when n > 62.
std::string emit_graph6(const Tree& t);

}  // namespace treecount
