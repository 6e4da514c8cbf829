#include "treecount/groupoid.hpp"

#include <algorithm>
#include <random>
#include <set>

#include "treecount/error.hpp"

namespace treecount {

Monomial monomial_product(const Monomial& a, const Monomial& b, int b_power) {
  Monomial out = a;
  for (auto [sym, e] : b) {
    int& slot = out[sym];
    slot += e * b_power;
    if (slot == 0) out.erase(sym);
  }
  return out;
}

std::string monomial_string(const Monomial& m, int label_offset) {
  if (m.empty()) return "1";
  std::string out;
  for (auto [sym, e] : m) {
    if (!out.empty()) out += " ";
    out += "a" + std::to_string(sym + label_offset);
    if (e != 1) out += "^" + std::to_string(e);
  }
  return out;
}

CoefficientState CoefficientState::symbolic(int n) {
  CoefficientState s = trivial(n);
  for (int v = 0; v < n; ++v) s.coeff[v][v] = 1;
  return s;
}

std::vector<Vertex> CoefficientState::support() const {
  std::vector<Vertex> out;
  for (std::size_t v = 0; v < coeff.size(); ++v)
    if (!coeff[v].empty()) out.push_back(static_cast<Vertex>(v));
  return out;
}

bool jump_allowed(const Tree& t, const Coloring& c, Vertex u, Vertex v) {
  if (u < 0 || v < 0 || u >= t.size() || v >= t.size() || !t.adjacent(u, v)) return false;
  const Color cu = c.color[u], cv = c.color[v];
  if (cu == Color::Red && cv == Color::Green) return true;
  if (cu == Color::Green && cv == Color::Red) return true;
  if (cu == Color::Orange && cv == Color::Orange)
    return std::binary_search(c.orange_dominoes.begin(), c.orange_dominoes.end(), Edge(u, v));
  return false;
}

CoefficientState jump(const CoefficientState& s, const Tree& t, const Coloring& c, Vertex u, Vertex v) {
  if (!jump_allowed(t, c, u, v))
    throw DomainError("jump of " + std::to_string(u) + " over " + std::to_string(v) + " is not allowed");
  CoefficientState out = s;
  const Monomial moved = s.coeff[u];
  out.coeff[u].clear();
  for (Vertex w : t.neighbors(v))
    if (w != u) out.coeff[w] = monomial_product(out.coeff[w], moved, -1);
  return out;
}

std::vector<FqElement> jump_values(std::span<const FqElement> alpha, const Tree& t, Vertex u, Vertex v,
                                   const FqContext& ctx) {
  if (!t.adjacent(u, v)) throw DomainError("jump_values: not an edge");
  std::vector<FqElement> out(alpha.begin(), alpha.end());
  const FqElement inverse = ctx.inv(alpha[u]);
  out[u] = 1;
  for (Vertex w : t.neighbors(v))
    if (w != u) out[w] = ctx.mul(out[w], inverse);
  return out;
}

std::vector<std::vector<Vertex>> auxiliary_graph(const Tree& t, const Matching& m) {
  std::vector<std::vector<Vertex>> g(t.size());
  const auto partner = matching_partners(t.size(), m);
  for (Vertex u = 0; u < t.size(); ++u) {
    const Vertex v = partner[u];
    if (v < 0) continue;
    for (Vertex w : t.neighbors(v))
      if (w != u) g[u].push_back(w);
  }
  return g;
}

std::vector<Vertex> linear_extension(const std::vector<std::vector<Vertex>>& graph,
                                     std::optional<std::uint64_t> seed) {
  const int n = static_cast<int>(graph.size());
  std::vector<int> indegree(n, 0);
  for (const auto& outs : graph)
    for (Vertex w : outs) ++indegree[w];
  std::vector<Vertex> ready;
  for (Vertex v = 0; v < n; ++v)
    if (indegree[v] == 0) ready.push_back(v);
  std::mt19937_64 rng(seed.value_or(0));
  std::vector<Vertex> order;
  while (!ready.empty()) {
    std::size_t pick = 0;
    if (seed) {
      pick = std::uniform_int_distribution<std::size_t>(0, ready.size() - 1)(rng);
    } else {
      pick = static_cast<std::size_t>(std::min_element(ready.begin(), ready.end()) - ready.begin());
    }
    const Vertex v = ready[pick];
    ready.erase(ready.begin() + static_cast<std::ptrdiff_t>(pick));
    order.push_back(v);
    for (Vertex w : graph[v])
      if (--indegree[w] == 0) ready.push_back(w);
  }
  if (static_cast<int>(order.size()) != n) throw InvariantError("auxiliary graph has an oriented cycle");
  return order;
}

CoefficientState normalize_to_matching(const CoefficientState& s, const Tree& t, const Coloring& c,
                                       const Matching& m, std::optional<std::uint64_t> seed) {
  if (static_cast<int>(s.coeff.size()) != t.size()) throw DomainError("coefficient state has the wrong size");
  if (!is_matching(t, m)) throw DomainError("not a matching of the tree");
  if (m.size() != maximum_matching(t).size()) throw DomainError("matching is not maximum");
  const auto partner = matching_partners(t.size(), m);
  CoefficientState out = s;
  for (Vertex u : linear_extension(auxiliary_graph(t, m), seed))
    if (partner[u] >= 0) out = jump(out, t, c, u, partner[u]);
  for (Vertex v : out.support())
    if (partner[v] >= 0 || c.color[v] != Color::Red)
      throw InvariantError("normalized coefficient left on vertex " + std::to_string(v));
  return out;
}

RankProfile rank_profile(const RedGreenPartition& p, const PhiAssignment& phi) {
  if (phi.size() != p.size())
    throw DomainError("phi assignment covers " + std::to_string(phi.size()) + " components, tree has " +
                      std::to_string(p.size()));
  RankProfile r;
  for (std::size_t i = 0; i < p.size(); ++i) {
    const int d = p.components[i].dimension();
    r.component_dimension.push_back(d);
    (phi[i] == Phi::Generic ? r.rank : r.versal_rank) += d;
  }
  return r;
}

RankProfile rank_profile(const Tree& t, const PhiAssignment& phi) {
  return rank_profile(red_green_components(t, canonical_coloring(t)), phi);
}

Monomial alternating_product(const CoefficientState& s, const AdmissibleSet& a) {
  Monomial out;
  for (std::size_t i = 0; i < a.members.size(); ++i) out = monomial_product(out, s.coeff[a.members[i]], a.signs[i]);
  return out;
}

bool genericity_check(std::span<const AdmissibleSet> sets, std::span<const FqElement> alpha,
                      const FqContext& ctx) {
  for (const AdmissibleSet& a : sets) {
    FqElement product = 1;
    for (std::size_t i = 0; i < a.members.size(); ++i) {
      const FqElement value = alpha[a.members[i]];
      if (value % ctx.q() == 0) throw DomainError("genericity_check: zero parameter value");
      product = ctx.mul(product, a.signs[i] > 0 ? value : ctx.inv(value));
    }
    const FqElement target = a.members.size() % 2 == 0 ? 1 : ctx.minus_one();
    if (product == target) return false;
  }
  return true;
}

bool genericity_check(const Tree& t, const RedGreenComponent& comp, std::span<const FqElement> alpha,
                      const FqContext& ctx) {
  if (static_cast<int>(alpha.size()) != t.size()) throw DomainError("genericity_check: alpha has the wrong size");
  for (Vertex r : comp.reds)
    if (alpha[r] % ctx.q() == 0) throw DomainError("genericity_check: zero parameter value");
  const auto sets = admissible_sets(t, comp);
  return genericity_check(sets, alpha, ctx);
}

bool formally_generic(const CoefficientState& s, const Tree& t, const RedGreenComponent& comp) {
  for (const AdmissibleSet& a : admissible_sets(t, comp))
    if (alternating_product(s, a).empty()) return false;
  return true;
}

std::vector<FqElement> evaluate_state(const CoefficientState& s, std::span<const FqElement> symbol_values,
                                      const FqContext& ctx) {
  std::vector<FqElement> out(s.coeff.size(), 1);
  for (std::size_t v = 0; v < s.coeff.size(); ++v)
    for (auto [sym, e] : s.coeff[v]) out[v] = ctx.mul(out[v], ctx.pow(symbol_values[sym], e));
  return out;
}

}  // namespace treecount
