#pragma once

#include <cstdint>
#include <string_view>
#include <vector>

#include "treecount/coloring.hpp"

namespace treecount {

/// Per red-green component choice: parameters fixed at generic values, or
/// parameters kept as invertible variables.
enum class Phi : std::uint8_t { Generic = 1, Versal = 2 };

std::string_view to_string(Phi p);

/// phi[i] is the choice for component i of the RedGreenPartition.
using PhiAssignment = std::vector<Phi>;

inline PhiAssignment uniform_phi(const RedGreenPartition& p, Phi value) {
  return PhiAssignment(p.size(), value);
}

/// Every assignment over k components, Generic-first lexicographic.
std::vector<PhiAssignment> all_phi_assignments(std::size_t k);

/// Per-vertex decoration: the component's Phi on red/green vertices, 0 on
/// orange ones. Throws DomainError if phi does not cover the partition.
std::vector<int> phi_labels(const RedGreenPartition& p, const PhiAssignment& phi);

}  // namespace treecount
