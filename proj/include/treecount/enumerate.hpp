#pragma once

#include <vector>

#include "treecount/tree.hpp"

namespace treecount {

constexpr int kMaxEnumerationSize = 16;

/// One representative per isomorphism class of trees on n vertices, each in
/// canonical vertex order. Deterministic output order. 1 <= n <= 16.
std::vector<Tree> enumerate_free_trees(int n);

}  // namespace treecount
