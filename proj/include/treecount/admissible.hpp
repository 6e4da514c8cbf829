#pragma once

#include <vector>

#include "treecount/coloring.hpp"
#include "treecount/tree.hpp"

namespace treecount {

/// Nonempty set of red vertices of one red-green component in which every
/// green vertex of the component has 0 or 2 members as neighbors. Two members
/// sharing a green neighbor carry opposite signs.
struct AdmissibleSet {
  std::vector<Vertex> members;  // sorted
  std::vector<int> signs;       // +1 / -1, parallel to members

  bool operator==(const AdmissibleSet&) const = default;
};

/// True when `members` satisfies the 0-or-2 rule inside `comp`.
bool is_admissible(const Tree& t, const RedGreenComponent& comp, const std::vector<Vertex>& members);

/// Members grouped by the "share a green neighbor" relation; each group is
/// listed in increasing order, groups by smallest member. Throws
/// InvariantError if that relation has a cycle or cannot be 2-colored.
std::vector<std::vector<Vertex>> sign_groups(const Tree& t, const RedGreenComponent& comp,
                                             const std::vector<Vertex>& members,
                                             std::vector<int>* signs_out = nullptr);

constexpr int kMaxAdmissibleReds = 24;

/// Every admissible set of the component with every consistent sign pattern,
/// up to a global flip: the smallest member always carries +1. When the
/// share-a-green-neighbor relation splits S into k groups, S appears 2^(k-1)
/// times. Deterministic order.
std::vector<AdmissibleSet> admissible_sets(const Tree& t, const RedGreenComponent& comp);

/// Completion loop: start from {u}; while some green vertex has exactly one
/// member as neighbor, add its smallest other red neighbor.
AdmissibleSet grow_admissible(const Tree& t, const Coloring& c, const RedGreenComponent& comp, Vertex u);

}  // namespace treecount
