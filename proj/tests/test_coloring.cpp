#include <doctest.h>

#include "support/oracles.hpp"
#include "treecount/coloring.hpp"
#include "treecount/enumerate.hpp"
#include "treecount/error.hpp"
#include "treecount/matching.hpp"

using namespace treecount;

namespace {

constexpr Color R = Color::Red, O = Color::Orange, G = Color::Green;

// Two copies of star(3) whose centers are joined by an edge.
Tree double_star() {
  return Tree::from_edges(8, {{0, 1}, {0, 2}, {0, 3}, {0, 4}, {4, 5}, {4, 6}, {4, 7}});
}

std::vector<Color> restrict_colors(const Coloring& c, const std::vector<Vertex>& to_parent) {
  std::vector<Color> out;
  for (Vertex v : to_parent) out.push_back(c.color[v]);
  return out;
}

// Removes `gone` and checks every piece recolors to the inherited colors.
void check_stable_removal(const Tree& t, const Coloring& c, std::span<const Vertex> gone) {
  const Forest f = remove_vertices(t, gone);
  for (std::size_t i = 0; i < f.components.size(); ++i)
    REQUIRE(canonical_coloring(f.components[i]).color == restrict_colors(c, f.to_parent[i]));
}

}  // namespace

TEST_CASE("example colorings") {
  const Coloring fig = canonical_coloring(oracle::figure_tree());
  CHECK(fig.color == std::vector<Color>{O, O, R, G, R, G, R});
  CHECK(fig.orange_dominoes == std::vector<Edge>{{0, 1}});

  const Coloring single = canonical_coloring(path_tree(1));
  CHECK(single.color == std::vector<Color>{R});

  const Coloring p4 = canonical_coloring(path_tree(4));
  CHECK(p4.color == std::vector<Color>(4, O));
  CHECK(p4.orange_dominoes == std::vector<Edge>{{0, 1}, {2, 3}});

  CHECK(coloring_by_vertex_covers(oracle::figure_tree()).color == fig.color);
  CHECK(coloring_by_vertex_covers(path_tree(2)).color == std::vector<Color>{O, O});
  CHECK(coloring_by_vertex_covers(star_tree(3)).color == std::vector<Color>{G, R, R, R});

  const Coloring fig_matchings = coloring_by_matchings(oracle::figure_tree());
  CHECK(fig_matchings.orange_dominoes == std::vector<Edge>{{0, 1}});
  CHECK(coloring_by_matchings(path_tree(2)).color == std::vector<Color>{O, O});
  CHECK(coloring_by_matchings(path_tree(3)).color == std::vector<Color>{R, G, R});
}

TEST_CASE("red-green components") {
  const Tree fig = oracle::figure_tree();
  const RedGreenPartition p = red_green_components(fig, canonical_coloring(fig));
  REQUIRE(p.size() == 1);
  CHECK(p.components[0].vertices == std::vector<Vertex>{2, 3, 4, 5, 6});
  CHECK(p.components[0].edges == std::vector<Edge>{{2, 3}, {3, 4}, {4, 5}, {5, 6}});
  CHECK(p.component_of[0] == -1);

  CHECK(red_green_components(path_tree(4), canonical_coloring(path_tree(4))).size() == 0);

  const Tree ds = double_star();
  const Coloring c = canonical_coloring(ds);
  CHECK(c.color[0] == G);
  CHECK(c.color[4] == G);
  const RedGreenPartition two = red_green_components(ds, c);
  REQUIRE(two.size() == 2);
  CHECK(two.components[0].vertices == std::vector<Vertex>{0, 1, 2, 3});
  CHECK(two.components[1].vertices == std::vector<Vertex>{4, 5, 6, 7});
}

TEST_CASE("dimension examples") {
  CHECK(dimension(path_tree(7)) == 1);
  CHECK(dimension(family_D(4)) == 2);
  CHECK(dimension(path_tree(4)) == 0);
  CHECK(classify(path_tree(7)).kind == TreeKind::Unimodal);
  CHECK(classify(path_tree(4)).kind == TreeKind::Orange);
  CHECK(classify(family_D(4)).kind == TreeKind::Other);
}

TEST_CASE("three descriptions of the coloring agree for n <= 10") {
  for (int n = 1; n <= 10; ++n)
    for (const Tree& t : enumerate_free_trees(n)) {
      const Coloring c = canonical_coloring(t);
      const Coloring covers = coloring_by_vertex_covers(t);
      const Coloring matchings = coloring_by_matchings(t);
      REQUIRE(c.color == covers.color);
      REQUIRE(c.color == matchings.color);
      REQUIRE(c.orange_dominoes == matchings.orange_dominoes);
    }
}

TEST_CASE("local characterization holds for n <= 12") {
  for (int n = 1; n <= 12; ++n)
    for (const Tree& t : enumerate_free_trees(n)) {
      const Coloring c = canonical_coloring(t);
      const auto problem = local_characterization_violation(t, c);
      REQUIRE_MESSAGE(!problem, *problem);
      const TreeClass cls = classify(t);
      REQUIRE((cls.kind == TreeKind::Orange) == (c.count(O) == n));
    }
}

TEST_CASE("local characterization detects broken colorings") {
  const Tree p3 = path_tree(3);
  Coloring c = canonical_coloring(p3);
  c.color[1] = R;
  CHECK(local_characterization_violation(p3, c).has_value());
  Coloring lonely_green{{R, G}, {}};
  CHECK(local_characterization_violation(path_tree(2), lonely_green).has_value());
  Coloring unmatched{{O, O}, {}};
  CHECK(local_characterization_violation(path_tree(2), unmatched).has_value());
}

TEST_CASE("processing order does not change the coloring") {
  for (int n = 1; n <= 9; ++n)
    for (const Tree& t : enumerate_free_trees(n)) {
      const Coloring c = canonical_coloring(t);
      for (std::uint64_t seed = 0; seed < 20; ++seed) REQUIRE(canonical_coloring_shuffled(t, seed) == c);
    }
}

TEST_CASE("dimension equals adjacency nullity and uncovered count for n <= 10") {
  for (int n = 1; n <= 10; ++n)
    for (const Tree& t : enumerate_free_trees(n)) {
      const int d = dimension(t);
      REQUIRE(d == adjacency_nullity(t));
      REQUIRE(d == n - 2 * static_cast<int>(maximum_matching(t).size()));
    }
}

TEST_CASE("dimension splits over red-green edges and red vertices") {
  for (int n = 1; n <= 10; ++n)
    for (const Tree& t : enumerate_free_trees(n)) {
      const Coloring c = canonical_coloring(t);
      const RedGreenPartition p = red_green_components(t, c);
      for (const RedGreenComponent& comp : p.components) REQUIRE(comp.dimension() >= 1);
      if (c.count(O) > 0) continue;
      const int d = dimension(c);
      // Removing the ends of a red-green edge splits the dimension additively.
      // Green-green edges join separate components and do not.
      for (const Edge& e : t.edges()) {
        if (c.color[e.u] == c.color[e.v]) continue;
        const Vertex pair[] = {e.u, e.v};
        int sum = 0;
        for (const Tree& piece : remove_vertices(t, pair).components) sum += dimension(piece);
        REQUIRE(sum == d);
      }
      // Removing one red vertex drops the dimension by one.
      for (Vertex v = 0; v < n; ++v) {
        if (c.color[v] != R) continue;
        const Vertex one[] = {v};
        int sum = 0;
        for (const Tree& piece : remove_vertices(t, one).components) sum += dimension(piece);
        REQUIRE(sum == d - 1);
      }
    }
}

TEST_CASE("coloring is stable under the standard restrictions") {
  for (int n = 2; n <= 10; ++n)
    for (const Tree& t : enumerate_free_trees(n)) {
      const Coloring c = canonical_coloring(t);
      std::vector<Vertex> orange, red_green;
      for (Vertex v = 0; v < n; ++v) (c.color[v] == O ? orange : red_green).push_back(v);
      check_stable_removal(t, c, orange);     // keeps red and green vertices
      check_stable_removal(t, c, red_green);  // keeps orange vertices
      for (const Edge& d : c.orange_dominoes) {
        const Vertex pair[] = {d.u, d.v};
        check_stable_removal(t, c, pair);
      }
      for (Vertex v = 0; v < n; ++v)
        if (c.color[v] == G) {
          const Vertex one[] = {v};
          check_stable_removal(t, c, one);
        }
    }
}

TEST_CASE("oracle size guards") {
  const Tree big = path_tree(21);
  CHECK_THROWS_AS(coloring_by_vertex_covers(big), GuardError);
  CHECK_THROWS_AS(coloring_by_matchings(big), GuardError);
  CHECK_NOTHROW(canonical_coloring(big));
}
