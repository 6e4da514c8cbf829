#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "treecount/admissible.hpp"
#include "treecount/coloring.hpp"
#include "treecount/fq.hpp"
#include "treecount/matching.hpp"
#include "treecount/phi.hpp"

namespace treecount {

/// Monic Laurent monomial in the symbols a_w: symbol -> nonzero exponent.
using Monomial = std::map<Vertex, int>;

Monomial monomial_product(const Monomial& a, const Monomial& b, int b_power = 1);
std::string monomial_string(const Monomial& m, int label_offset = 0);

/// Coefficient attached to every vertex.
struct CoefficientState {
  std::vector<Monomial> coeff;

  /// a_i on every vertex i.
  static CoefficientState symbolic(int n);
  static CoefficientState trivial(int n) { return {std::vector<Monomial>(n)}; }

  /// Vertices with a nontrivial coefficient.
  std::vector<Vertex> support() const;
  bool operator==(const CoefficientState&) const = default;
};

/// Red over a green neighbor, green over a red neighbor, orange over its
/// domino partner.
bool jump_allowed(const Tree& t, const Coloring& c, Vertex u, Vertex v);

/// Moves the coefficient of u away over v: u becomes trivial and every other
/// neighbor of v is divided by the old coefficient of u. Throws DomainError on
/// a disallowed jump.
CoefficientState jump(const CoefficientState& s, const Tree& t, const Coloring& c, Vertex u, Vertex v);

/// Same move on numeric parameters over F_q.
std::vector<FqElement> jump_values(std::span<const FqElement> alpha, const Tree& t, Vertex u, Vertex v,
                                   const FqContext& ctx);

/// Arrows u -> w whenever u-v is a domino of m and v-w is another edge.
std::vector<std::vector<Vertex>> auxiliary_graph(const Tree& t, const Matching& m);

/// Topological order of the auxiliary graph (smallest ready vertex first, or a
/// random ready vertex when seeded). Throws InvariantError on a cycle.
std::vector<Vertex> linear_extension(const std::vector<std::vector<Vertex>>& graph,
                                     std::optional<std::uint64_t> seed = std::nullopt);

/// Jumps every covered vertex over its partner along a linear extension of the
/// auxiliary graph. The result is supported on red vertices uncovered by m.
/// Throws DomainError if m is not a maximum matching of t.
CoefficientState normalize_to_matching(const CoefficientState& s, const Tree& t, const Coloring& c,
                                       const Matching& m, std::optional<std::uint64_t> seed = std::nullopt);

struct RankProfile {
  std::vector<int> component_dimension;
  int rank = 0;         // sum over Generic components
  int versal_rank = 0;  // sum over Versal components
};

/// Throws DomainError when phi does not cover every component.
RankProfile rank_profile(const Tree& t, const PhiAssignment& phi);
RankProfile rank_profile(const RedGreenPartition& p, const PhiAssignment& phi);

/// Alternating product of the members' coefficients with the set's signs.
Monomial alternating_product(const CoefficientState& s, const AdmissibleSet& a);

/// For every admissible set S of comp: prod alpha_i^{sign_i} != (-1)^{#S}.
/// alpha is indexed by vertex (1 where no parameter sits). Throws DomainError
/// on a zero value at a red vertex of comp.
bool genericity_check(const Tree& t, const RedGreenComponent& comp, std::span<const FqElement> alpha,
                      const FqContext& ctx);

/// Same check against a precomputed list of admissible sets.
bool genericity_check(std::span<const AdmissibleSet> sets, std::span<const FqElement> alpha,
                      const FqContext& ctx);

/// Formal version: every alternating product is a nonconstant monomial, so
/// generic values exist over large enough fields.
bool formally_generic(const CoefficientState& s, const Tree& t, const RedGreenComponent& comp);

/// Substitutes symbol values into every coefficient.
std::vector<FqElement> evaluate_state(const CoefficientState& s, std::span<const FqElement> symbol_values,
                                      const FqContext& ctx);

}  // namespace treecount
