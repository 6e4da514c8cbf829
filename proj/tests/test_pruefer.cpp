#include <doctest.h>

#include <set>

#include "support/oracles.hpp"
#include "treecount/canonical.hpp"
#include "treecount/enumerate.hpp"

using namespace treecount;

namespace {

std::set<CanonicalKey> produced_classes(int n) {
  std::set<CanonicalKey> keys;
  for (const Tree& t : enumerate_free_trees(n)) keys.insert(canonical_key(t));
  return keys;
}

}  // namespace

TEST_CASE("decoding reproduces known labeled trees") {
  // Sequence (3, 3, 3) on five vertices is the star centered at 3 plus edge 3-4.
  const auto star = oracle::pruefer_decode({3, 3, 3}, 5);
  CHECK(Tree::from_edges(5, star) == Tree::from_edges(5, {{0, 3}, {1, 3}, {2, 3}, {3, 4}}));
  const auto path = oracle::pruefer_decode({1, 2, 3}, 5);
  CHECK(Tree::from_edges(5, path) == path_tree(5));
  const auto late = oracle::pruefer_decode({4, 0, 1}, 5);
  CHECK(Tree::from_edges(5, late) == Tree::from_edges(5, {{2, 4}, {3, 0}, {0, 1}, {1, 4}}));
}

TEST_CASE("every labeled tree on 9 and 10 vertices falls in an enumerated class") {
  for (int n = 9; n <= 10; ++n) {
    std::set<CanonicalKey> classes;
    std::uint64_t seen = 0;
    oracle::for_each_labeled_tree(n, [&](const Tree& t) {
      classes.insert(canonical_key(t));
      ++seen;
    });
    std::uint64_t cayley = 1;
    for (int k = 0; k < n - 2; ++k) cayley *= n;
    CHECK(seen == cayley);
    CHECK(classes == produced_classes(n));
  }
}
