#pragma once

#include <span>
#include <string>
#include <vector>

#include "treecount/tree.hpp"

namespace treecount {

/// Canonical byte string of a vertex-labeled tree. Equal keys iff a
/// label-preserving isomorphism exists.
using CanonicalKey = std::string;

/// AHU signature rooted at the center (or the ordered pair of bicenter halves).
/// `labels` may be empty (all zero); entries must lie in 0..255.
CanonicalKey canonical_key(const Tree& t, std::span<const int> labels = {});

/// Key of a forest: sorted component keys, so component order is irrelevant.
CanonicalKey canonical_key(const std::vector<Tree>& components,
                           const std::vector<std::vector<int>>& labels);

/// The one or two central vertices of t.
std::vector<Vertex> tree_centers(const Tree& t);

/// Permutation perm (old -> new) putting t into canonical vertex order:
/// isomorphic trees map to identical relabeled trees.
std::vector<Vertex> canonical_order(const Tree& t);

inline Tree canonical_form(const Tree& t) { return t.relabeled(canonical_order(t)); }

}  // namespace treecount
