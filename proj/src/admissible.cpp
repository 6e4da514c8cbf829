#include "treecount/admissible.hpp"

#include <algorithm>
#include <cstdint>

#include "treecount/error.hpp"

namespace treecount {

namespace {

std::vector<char> membership(int n, const std::vector<Vertex>& members) {
  std::vector<char> in(n, 0);
  for (Vertex v : members) in[v] = 1;
  return in;
}

}  // namespace

bool is_admissible(const Tree& t, const RedGreenComponent& comp, const std::vector<Vertex>& members) {
  if (members.empty()) return false;
  const auto in = membership(t.size(), members);
  for (Vertex v : members)
    if (!std::binary_search(comp.reds.begin(), comp.reds.end(), v)) return false;
  for (Vertex g : comp.greens) {
    int hits = 0;
    for (Vertex w : t.neighbors(g)) hits += in[w];
    if (hits != 0 && hits != 2) return false;
  }
  return true;
}

std::vector<std::vector<Vertex>> sign_groups(const Tree& t, const RedGreenComponent& comp,
                                             const std::vector<Vertex>& members,
                                             std::vector<int>* signs_out) {
  const int n = t.size();
  const auto in = membership(n, members);
  std::vector<std::vector<Vertex>> link(n);
  for (Vertex g : comp.greens) {
    std::vector<Vertex> hit;
    for (Vertex w : t.neighbors(g))
      if (in[w]) hit.push_back(w);
    if (hit.size() == 2) {
      link[hit[0]].push_back(hit[1]);
      link[hit[1]].push_back(hit[0]);
    }
  }
  std::vector<int> sign(n, 0);
  std::vector<std::vector<Vertex>> groups;
  int links = 0;
  for (Vertex v : members) links += static_cast<int>(link[v].size());
  for (Vertex start : members) {
    if (sign[start] != 0) continue;
    std::vector<Vertex> group;
    std::vector<Vertex> queue{start};
    sign[start] = 1;
    for (std::size_t h = 0; h < queue.size(); ++h) {
      Vertex v = queue[h];
      group.push_back(v);
      for (Vertex w : link[v]) {
        if (sign[w] == 0) {
          sign[w] = -sign[v];
          queue.push_back(w);
        } else if (sign[w] == sign[v]) {
          throw InvariantError("admissible set signs: parity conflict");
        }
      }
    }
    std::sort(group.begin(), group.end());
    groups.push_back(std::move(group));
  }
  // A forest on |members| vertices with |groups| trees has |members|-|groups| edges.
  if (links / 2 != static_cast<int>(members.size() - groups.size()))
    throw InvariantError("admissible set signs: share-a-green-neighbor relation has a cycle");
  if (signs_out) {
    signs_out->clear();
    for (Vertex v : members) signs_out->push_back(sign[v]);
  }
  return groups;
}

std::vector<AdmissibleSet> admissible_sets(const Tree& t, const RedGreenComponent& comp) {
  const auto& reds = comp.reds;
  if (static_cast<int>(reds.size()) > kMaxAdmissibleReds)
    throw GuardError("admissible set enumeration limited to 24 red vertices per component");
  std::vector<AdmissibleSet> out;
  const std::uint32_t limit = 1u << reds.size();
  for (std::uint32_t mask = 1; mask < limit; ++mask) {
    std::vector<Vertex> members;
    for (std::size_t i = 0; i < reds.size(); ++i)
      if (mask & (1u << i)) members.push_back(reds[i]);
    if (!is_admissible(t, comp, members)) continue;
    std::vector<int> base;
    const auto groups = sign_groups(t, comp, members, &base);
    // Group 0 holds the smallest member and keeps its orientation.
    const std::uint32_t patterns = 1u << (groups.size() - 1);
    for (std::uint32_t flip = 0; flip < patterns; ++flip) {
      AdmissibleSet s{members, base};
      for (std::size_t g = 1; g < groups.size(); ++g) {
        if (!(flip & (1u << (g - 1)))) continue;
        for (Vertex v : groups[g]) {
          auto pos = std::lower_bound(members.begin(), members.end(), v) - members.begin();
          s.signs[pos] = -s.signs[pos];
        }
      }
      out.push_back(std::move(s));
    }
  }
  return out;
}

AdmissibleSet grow_admissible(const Tree& t, const Coloring& c, const RedGreenComponent& comp, Vertex u) {
  if (!std::binary_search(comp.reds.begin(), comp.reds.end(), u))
    throw DomainError("grow_admissible: vertex " + std::to_string(u) + " is not a red vertex of the component");
  std::vector<char> in(t.size(), 0);
  in[u] = 1;
  for (bool changed = true; changed;) {
    changed = false;
    for (Vertex g : comp.greens) {
      int hits = 0;
      for (Vertex w : t.neighbors(g)) hits += in[w];
      if (hits != 1) continue;
      for (Vertex w : t.neighbors(g))
        if (!in[w] && c.color[w] == Color::Red) {
          in[w] = 1;
          changed = true;
          break;
        }
      if (changed) break;
    }
  }
  AdmissibleSet s;
  for (Vertex v = 0; v < t.size(); ++v)
    if (in[v]) s.members.push_back(v);
  if (!is_admissible(t, comp, s.members)) throw InvariantError("grow_admissible produced a non-admissible set");
  sign_groups(t, comp, s.members, &s.signs);
  return s;
}

}  // namespace treecount
