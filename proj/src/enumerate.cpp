#include "treecount/enumerate.hpp"

#include <algorithm>
#include <map>
#include <mutex>

#include "treecount/canonical.hpp"
#include "treecount/error.hpp"

namespace treecount {

namespace {

// Levels are grown by attaching one leaf anywhere and keeping the first
// representative of each canonical key. Cached across calls.
std::vector<std::vector<Tree>>& levels() {
  static std::vector<std::vector<Tree>> cache{{}, {path_tree(1)}};
  return cache;
}

std::mutex& levels_mutex() {
  static std::mutex m;
  return m;
}

std::vector<Tree> grow(const std::vector<Tree>& smaller) {
  std::map<CanonicalKey, Tree> seen;
  for (const Tree& t : smaller) {
    const int n = t.size();
    for (Vertex v = 0; v < n; ++v) {
      std::vector<Edge> edges = t.edges();
      edges.emplace_back(v, n);
      Tree bigger = Tree::from_edges(n + 1, std::move(edges));
      CanonicalKey key = canonical_key(bigger);
      if (!seen.contains(key)) seen.emplace(std::move(key), canonical_form(bigger));
    }
  }
  std::vector<Tree> out;
  out.reserve(seen.size());
  for (auto& [key, tree] : seen) out.push_back(std::move(tree));
  return out;
}

}  // namespace

std::vector<Tree> enumerate_free_trees(int n) {
  if (n < 1 || n > kMaxEnumerationSize)
    throw GuardError("enumerate_free_trees: n must lie in 1.." + std::to_string(kMaxEnumerationSize));
  std::lock_guard lock(levels_mutex());
  auto& cache = levels();
  while (static_cast<int>(cache.size()) <= n) cache.push_back(grow(cache.back()));
  return cache[n];
}

}  // namespace treecount
