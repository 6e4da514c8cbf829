#pragma once

#include <compare>
#include <cstdint>
#include <istream>
#include <span>
#include <string>
#include <utility>
#include <vector>

namespace treecount {

using Vertex = int;

/// Undirected edge, stored with u < v.
struct Edge {
  Vertex u = 0;
  Vertex v = 0;

  Edge() = default;
  Edge(Vertex a, Vertex b) : u(a < b ? a : b), v(a < b ? b : a) {}

  Vertex other(Vertex w) const { return w == u ? v : u; }
  bool contains(Vertex w) const { return w == u || w == v; }

  auto operator<=>(const Edge&) const = default;
};

/// Finite tree on the vertices 0..n-1. Immutable once built.
class Tree {
 public:
  Tree() = default;

  /// Validates connectivity, acyclicity, loops and duplicates; throws DomainError.
  static Tree from_edges(int n, std::vector<Edge> edges);

  int size() const { return n_; }
  const std::vector<Edge>& edges() const { return edges_; }
  std::span<const Vertex> neighbors(Vertex v) const { return adjacency_[v]; }
  int degree(Vertex v) const { return static_cast<int>(adjacency_[v].size()); }
  bool is_leaf(Vertex v) const { return degree(v) <= 1; }
  bool adjacent(Vertex a, Vertex b) const;

  /// Same tree with vertex v renamed to perm[v].
  Tree relabeled(std::span<const Vertex> perm) const;

  bool operator==(const Tree& other) const {
    return n_ == other.n_ && edges_ == other.edges_;
  }

 private:
  int n_ = 0;
  std::vector<Edge> edges_;  // sorted
  std::vector<std::vector<Vertex>> adjacency_;
};

/// Disjoint union of trees, each remembering where its vertices came from.
struct Forest {
  std::vector<Tree> components;
  /// to_parent[c][local] is the label of that vertex in the source tree.
  std::vector<std::vector<Vertex>> to_parent;

  int size() const;
  bool empty() const { return components.empty(); }
};

/// Induced forest on the complement of `removed`. Components are ordered by
/// their smallest source label and keep the relative order of their vertices.
Forest remove_vertices(const Tree& t, std::span<const Vertex> removed);

/// The whole tree as a one-component forest.
Forest as_forest(const Tree& t);

// Named families. Vertex numbering follows the usual Dynkin figures shifted to 0.
Tree path_tree(int n);
Tree star_tree(int leaves);
/// Path of n-2 vertices with two extra leaves on its first vertex (n >= 4).
Tree family_D(int n);
/// One triple point with branches of 1, 2 and n-4 vertices (n >= 5).
Tree family_E(int n);

/// Labels from a parsed edge list plus the base the user wrote them in.
struct EdgeListInput {
  Tree tree;
  int base = 0;
};

/// Reads "u v" lines; a lone "v" line declares an isolated vertex, `#` starts a
/// comment. base: 0, 1, or -1 for auto (1-based when no label 0 appears).
EdgeListInput parse_edge_list(std::istream& in, int base = -1);

}  // namespace treecount
