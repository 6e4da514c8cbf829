#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "treecount/tree.hpp"

namespace treecount {

enum class Color : std::uint8_t { Red, Orange, Green };

std::string_view to_string(Color c);

/// Per-vertex colors plus the dominoes forced on orange vertices.
struct Coloring {
  std::vector<Color> color;
  std::vector<Edge> orange_dominoes;  // sorted

  int count(Color c) const;
  bool operator==(const Coloring&) const = default;
};

/// Fixpoint algorithm: start all red; a vertex with exactly one red neighbor
/// turns it green (laying a domino when the vertex itself is green); finally
/// green vertices without red neighbors become orange.
Coloring canonical_coloring(const Tree& t);

/// Same fixpoint, but the next applicable vertex is drawn at random.
Coloring canonical_coloring_shuffled(const Tree& t, std::uint64_t seed);

constexpr int kMaxOracleSize = 20;

/// Colors from membership in minimum vertex covers. No dominoes. n <= 20.
Coloring coloring_by_vertex_covers(const Tree& t);

/// Colors and forced dominoes from the set of all maximum matchings. n <= 20.
Coloring coloring_by_matchings(const Tree& t);

/// Checks the local characterization: orange dominoes perfectly match the
/// orange vertices, greens have >= 2 red neighbors, reds only green ones.
/// Returns a description of the first violation.
std::optional<std::string> local_characterization_violation(const Tree& t, const Coloring& c);

/// Connected pieces of the subgraph of red-green edges.
struct RedGreenComponent {
  std::vector<Vertex> vertices;  // sorted; vertices.front() is the handle
  std::vector<Edge> edges;       // red-green edges only
  std::vector<Vertex> reds;
  std::vector<Vertex> greens;

  int dimension() const {
    return static_cast<int>(reds.size()) - static_cast<int>(greens.size());
  }
};

struct RedGreenPartition {
  std::vector<RedGreenComponent> components;  // ordered by smallest vertex
  std::vector<int> component_of;              // -1 on orange vertices

  std::size_t size() const { return components.size(); }
};

/// Throws InvariantError when a component is not a tree with only red leaves.
RedGreenPartition red_green_components(const Tree& t, const Coloring& c);

/// r(T) - g(T).
int dimension(const Coloring& c);
int dimension(const Tree& t);

/// Dimension of the kernel of the adjacency matrix, by exact Bareiss elimination.
int adjacency_nullity(const Tree& t);

enum class TreeKind : std::uint8_t { Orange, Unimodal, Other };

struct TreeClass {
  int dimension = 0;
  TreeKind kind = TreeKind::Other;
};

TreeClass classify(const Tree& t);

}  // namespace treecount
