#include "treecount/phi.hpp"

#include <string>

#include "treecount/error.hpp"

namespace treecount {

std::string_view to_string(Phi p) { return p == Phi::Generic ? "generic" : "versal"; }

std::vector<PhiAssignment> all_phi_assignments(std::size_t k) {
  std::vector<PhiAssignment> out;
  for (std::uint32_t mask = 0; mask < (1u << k); ++mask) {
    PhiAssignment phi(k);
    for (std::size_t i = 0; i < k; ++i) phi[i] = (mask >> (k - 1 - i)) & 1 ? Phi::Versal : Phi::Generic;
    out.push_back(std::move(phi));
  }
  return out;
}

std::vector<int> phi_labels(const RedGreenPartition& p, const PhiAssignment& phi) {
  if (phi.size() != p.size())
    throw DomainError("phi assignment covers " + std::to_string(phi.size()) + " components, tree has " +
                      std::to_string(p.size()));
  std::vector<int> labels(p.component_of.size(), 0);
  for (std::size_t v = 0; v < labels.size(); ++v)
    if (p.component_of[v] >= 0) labels[v] = static_cast<int>(phi[p.component_of[v]]);
  return labels;
}

}  // namespace treecount
